#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diffseq/rational.hpp"

namespace diffseq {

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. The leading coefficient is nonzero unless the polynomial is zero.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs);
  UnivariatePoly(const Rational& c);  // NOLINT: constants embed

  /// The indeterminate itself.
  static UnivariatePoly identity();
  /// t + a
  static UnivariatePoly linear(const Rational& a);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& t) const;
  UnivariatePoly derivative() const;
  UnivariatePoly derivative(int times) const;

  UnivariatePoly& operator+=(const UnivariatePoly& o);
  UnivariatePoly& operator-=(const UnivariatePoly& o);
  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator-(UnivariatePoly a);
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& d) const;
  UnivariatePoly monic() const;

 private:
  void trim();

  std::vector<Rational> c_;
};

UnivariatePoly pow(const UnivariatePoly& p, unsigned e);
/// Monic gcd; gcd(0, 0) = 0.
UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);

/// (t + shift)(t + shift - 1)...(t + shift - k + 1); 1 for k = 0.
UnivariatePoly falling_factorial(const Rational& shift, int k);

/// Rational roots with multiplicity, ascending. The cofactor left after
/// deflating all of them is returned alongside.
struct RootSplit {
  std::vector<Rational> roots;
  UnivariatePoly remaining;
};
RootSplit rational_roots(const UnivariatePoly& p);

/// "3/2*x^2 - 1"-style text in the given variable, highest power first.
std::string to_text(const UnivariatePoly& p, const std::string& var = "x");
std::string to_latex(const UnivariatePoly& p, const std::string& var = "x");

/// Polynomial in x with rational coefficients.
using PolyX = UnivariatePoly;
/// Resonance polynomial in r.
using ResonancePoly = UnivariatePoly;

}  // namespace diffseq
