#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffseq/upoly.hpp"
#include "diffseq/verify.hpp"

namespace diffseq {

enum class Format { text, latex, json };

struct CommandSpec {
  std::string subcommand;
  std::optional<int> n;
  std::optional<std::pair<int, int>> range;
  Format format = Format::text;
  std::optional<int> depth;
  std::optional<int> j;
  bool all = false;
  bool nonlocal = false;
  std::string coeffs;
  bool check_linearisation = false;
  std::string p;
  std::string a;
  std::string x0;
  std::string suite;
  int max_n = 0;
  std::uint64_t seed = 1;
};

inline constexpr int kDefaultMaxN = 12;

/// poly := term (('+'|'-') term)*, optional leading sign;
/// term := rational ('*'? 'x' ('^' uint)?)? | 'x' ('^' uint)?;
/// rational := int ('/' uint)?. Whitespace between tokens is ignored.
PolyX parse_poly_spec(std::string_view s);

/// Limit on n, from DIFFSEQ_MAX_N when set.
int max_n_guard();

/// Exit codes: 0 success, 1 failed verification (a JSON report naming the
/// module, operation and residual goes to out), 2 usage or parse error.
int run_command(const CommandSpec& spec, std::ostream& out, std::ostream& err,
                const SuiteRegistry& suites = default_suites());

/// Parses argv and runs the command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const SuiteRegistry& suites = default_suites());

}  // namespace diffseq
