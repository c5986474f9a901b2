#pragma once

#include <string>
#include <vector>

#include "diffseq/exppoly.hpp"
#include "diffseq/report.hpp"
#include "diffseq/upoly.hpp"

namespace diffseq {

/// num/den in lowest terms with a monic denominator.
class RationalFunctionX {
 public:
  RationalFunctionX() : den_(Rational(1)) {}
  RationalFunctionX(const PolyX& num);  // NOLINT: polynomials embed
  RationalFunctionX(PolyX num, PolyX den);

  const PolyX& num() const { return num_; }
  const PolyX& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Throws PoleAtSamplePoint where the denominator vanishes.
  Rational operator()(const Rational& x) const;
  RationalFunctionX derivative() const;

  friend RationalFunctionX operator+(const RationalFunctionX& a, const RationalFunctionX& b);
  friend RationalFunctionX operator-(const RationalFunctionX& a, const RationalFunctionX& b);
  friend RationalFunctionX operator*(const RationalFunctionX& a, const RationalFunctionX& b);
  friend RationalFunctionX operator/(const RationalFunctionX& a, const RationalFunctionX& b);
  friend bool operator==(const RationalFunctionX&, const RationalFunctionX&) = default;

 private:
  PolyX num_;
  PolyX den_;
};

std::string to_text(const RationalFunctionX& f);

/// (y, y', ..., y^(order)) at x0 for y = P'/P. Throws PoleAtSamplePoint.
Jet riccati_jet(const PolyX& p, int order, const Rational& x0);

/// Jet of order n at x0 of the general solution y = P'/P, P = sum A_i x^i.
/// a must hold n + 1 entries.
Jet solution_jet(int n, const std::vector<Rational>& a, const Rational& x0);

/// (D + y)^k (P'/P) = P^(k+1)/P for k = 0..n as rational functions, and
/// R_n vanishing on jets at `samples` points that avoid the zeros of P.
/// Requires deg P <= n.
Report verify_solution_identity(int n, const PolyX& p, int samples);

/// I_j = (sum_{i=1}^j (-1)^(i+1)/(j-i)! x^(j-i) R_{n-i}) E with R_{-1} = 1.
struct InvariantExpr {
  int n = 0;
  int j = 0;
  ExpDiffPoly body;
};

/// Throws IndexOutOfRange unless 1 <= j <= n + 1.
InvariantExpr invariant(int n, int j);
/// D(I_j) reduces to zero modulo R_n.
Report verify_invariant(const InvariantExpr& inv);

/// I_j / I_i; both carry E^1, so the quotient is local.
struct FirstIntegralExpr {
  InvariantExpr num;
  InvariantExpr den;

  /// Net exponential level of num/den.
  int net_level() const;
};

/// Throws IdenticalIndices when i == j.
FirstIntegralExpr first_integral(int n, int i, int j);
/// D(num) den - num D(den) reduces to zero modulo R_n.
Report verify_first_integral(const FirstIntegralExpr& f);

/// E_n = sum_i f_i(x) R_i.
struct CombinationSpec {
  std::vector<PolyX> f;

  int n() const { return static_cast<int>(f.size()) - 1; }
};

/// Throws InvalidCombination when f is empty or f_n = 0.
DiffPoly combine(const CombinationSpec& spec);

/// E_n at y = P'/P equals (sum_i f_i P^(i+1))/P, exactly and at the given
/// points. Throws PoleAtSamplePoint if P vanishes at one of them.
Report check_linearisation(const CombinationSpec& spec, const PolyX& p,
                           const std::vector<Rational>& points);
/// As above at `samples` integer points avoiding the zeros of P.
Report check_linearisation(const CombinationSpec& spec, const PolyX& p, int samples);

/// {"coeffs": ["a0", "a1", ...]}
Json to_json(const PolyX& p);
PolyX polyx_from_json(const Json& j);

}  // namespace diffseq
