#pragma once

#include <iosfwd>
#include <string>

#include "diffseq/exppoly.hpp"

namespace diffseq {

/// Plain text, e.g. "y'' + 3*y*y' + y^3". Derivatives are primed up to
/// third order and written y^(k) beyond.
std::string to_text(const DiffPoly& p);
std::string to_text(const ExpDiffPoly& p);

/// LaTeX, e.g. "y' + y^{2}".
std::string to_latex(const DiffPoly& p);
std::string to_latex(const ExpDiffPoly& p);

std::ostream& operator<<(std::ostream& os, const DiffPoly& p);
std::ostream& operator<<(std::ostream& os, const ExpDiffPoly& p);

}  // namespace diffseq
