#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffseq/diffpoly.hpp"
#include "diffseq/json_io.hpp"
#include "diffseq/upoly.hpp"

namespace diffseq {

/// Polynomial in the free constants c_r that enter a Laurent series at its
/// positive resonances. Exponents are indexed by resonance.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT: constants embed
  static ParamPoly param(int resonance);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& c);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  /// e.g. "-c1^2 + 3/2*c1*c2"
  std::string to_text() const;

 private:
  void add(const std::vector<int>& exps, const Rational& c);

  std::map<std::vector<int>, Rational> terms_;
};

/// Leading-order balance y ~ alpha chi^p.
struct Balance {
  int p = 0;
  Rational alpha;
  UnivariatePoly alpha_poly;  ///< coefficient of the dominant chi power
};

/// All (p, alpha) with integer p and nonzero rational alpha. The equation
/// must be autonomous. Throws NoBalance or IrrationalLeadingCoefficient.
std::vector<Balance> dominant_balance(const DiffPoly& equation);

/// Coefficient of m in the chi^(min + r) term after y = alpha chi^p + m
/// chi^(p+r). Throws InconsistentBalance if (p, alpha) is not a balance.
ResonancePoly resonance_polynomial(const DiffPoly& equation, int p, const Rational& alpha);

/// Integer roots with multiplicity, ascending. Throws NonIntegerResonance.
std::vector<int> branch_resonances(const ResonancePoly& q);

struct ResonanceCheck {
  int resonance = 0;
  bool pass = false;
  ParamPoly forcing;
};

struct Branch {
  int p = -1;
  Rational alpha;
  ResonancePoly resonance_poly;
  std::vector<int> resonances;
  std::vector<ResonanceCheck> compatibility;

  bool compatible() const;
};

/// sum_k a_k chi^(p+k), k = 0..depth.
struct LaurentSeries {
  int p = 0;
  std::vector<ParamPoly> coefficients;

  int depth() const { return static_cast<int>(coefficients.size()) - 1; }
};

struct CompatibilityResult {
  LaurentSeries series;
  std::vector<ResonanceCheck> checks;

  bool passed() const;
};

/// Builds (p, alpha, Q, resonances) for one balance.
Branch make_branch(const DiffPoly& equation, const Balance& balance);

/// Solves the series order by order up to depth. At a positive resonance
/// the forcing must vanish identically; a free constant c_r is then
/// introduced. The series stops at the first failing resonance. Throws
/// RepeatedResonance for a repeated positive resonance and
/// InvalidArgument when depth is below the largest positive resonance.
CompatibilityResult compatibility_test(const DiffPoly& equation, const Branch& branch, int depth);

/// Coefficients of chi^(min + k), k = 0..count-1, after substituting the
/// series into the equation; min is the smallest exponent produced by the
/// leading term.
std::vector<ParamPoly> laurent_residual(const DiffPoly& equation, const LaurentSeries& series,
                                        int count);

struct PainleveReport {
  int n = 0;
  std::vector<Branch> branches;
  bool alphas_match = false;       ///< alpha = 1..n with p = -1
  bool closed_form_holds = false;  ///< resonances as in the general table
  bool pattern_rule_holds = false;
  bool painleve_pass = false;

  Json to_json() const;
};

/// Resonances expected for the branch alpha = j of member n:
/// {-1, 1..n-j, -2..-j}, ascending.
std::vector<int> expected_resonances(int n, int j);

/// The set for branch j from that of branch j - 1: its largest positive
/// resonance minus (n + 1) replaces it. Ascending.
std::vector<int> apply_pattern_rule(const std::vector<int>& previous, int n);

/// Complete analysis of member n. depth defaults to the largest positive
/// resonance of each branch.
PainleveReport painleve_report(int n, std::optional<int> depth = std::nullopt);

/// Resonances ordered as usually tabulated: -1, positives ascending, then
/// the remaining negatives descending.
std::vector<int> display_order(std::vector<int> resonances);

std::string render_table_text(const std::vector<PainleveReport>& reports);
std::string render_table_latex(const std::vector<PainleveReport>& reports);
/// Rows of the closed-form table for the general member.
std::string render_general_table_text();
std::string render_general_table_latex();

}  // namespace diffseq
