#include "diffseq/format.hpp"

#include <ostream>

namespace diffseq {
namespace {

enum class Style { text, latex };

std::string jet_name(int k, Style style) {
  if (k <= 3) return "y" + std::string(static_cast<std::size_t>(k), '\'');
  return style == Style::text ? "y^(" + std::to_string(k) + ")"
                              : "y^{(" + std::to_string(k) + ")}";
}

std::string raise(const std::string& base, int e, Style style, bool needs_group) {
  if (e == 1) return base;
  if (style == Style::text) return base + "^" + std::to_string(e);
  std::string b = needs_group ? "(" + base + ")" : base;
  return b + "^{" + std::to_string(e) + "}";
}

std::string monomial_string(const Monomial& m, Style style) {
  std::string out;
  auto append = [&](const std::string& factor) {
    if (!out.empty() && style == Style::text) out += "*";
    out += factor;
  };
  if (m.x_exp() > 0) append(raise("x", m.x_exp(), style, false));
  for (int k = 0; k <= m.order(); ++k)
    if (m.exponent(k) > 0)
      append(raise(jet_name(k, style), m.exponent(k), style, k > 3));
  return out;
}

std::string magnitude_string(const Rational& c, Style style) {
  Rational a = abs(c);
  if (style == Style::latex && a.get_den() != 1)
    return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  return a.get_str();
}

std::string poly_string(const DiffPoly& p, Style style) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono = monomial_string(m, style);
    bool unit = abs(c) == 1;
    if (mono.empty()) {
      out += magnitude_string(c, style);
    } else if (unit) {
      out += mono;
    } else {
      out += magnitude_string(c, style);
      out += style == Style::text ? "*" : "";
      out += mono;
    }
  }
  return out;
}

std::string exp_string(const ExpDiffPoly& p, Style style) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [l, q] : p.levels()) {
    if (!out.empty()) out += " + ";
    std::string body = poly_string(q, style);
    if (l == 0) {
      out += body;
      continue;
    }
    if (style == Style::text) {
      out += "(" + body + ")*E";
      if (l != 1) out += "^" + std::to_string(l);
    } else {
      std::string coeff = l == 1 ? "" : l == -1 ? "-" : std::to_string(l);
      out += "\\left(" + body + "\\right)e^{" + coeff + "\\int y\\,dx}";
    }
  }
  return out;
}

}  // namespace

std::string to_text(const DiffPoly& p) { return poly_string(p, Style::text); }
std::string to_text(const ExpDiffPoly& p) { return exp_string(p, Style::text); }
std::string to_latex(const DiffPoly& p) { return poly_string(p, Style::latex); }
std::string to_latex(const ExpDiffPoly& p) { return exp_string(p, Style::latex); }

std::ostream& operator<<(std::ostream& os, const DiffPoly& p) { return os << to_text(p); }
std::ostream& operator<<(std::ostream& os, const ExpDiffPoly& p) { return os << to_text(p); }

}  // namespace diffseq
