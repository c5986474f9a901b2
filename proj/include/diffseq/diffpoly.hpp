#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "diffseq/rational.hpp"

namespace diffseq {

/// Order reported for polynomials free of jet variables.
inline constexpr int kNoOrder = -1;

/// x^a * prod_k (y^(k))^e_k.
class Monomial {
 public:
  Monomial() = default;

  static Monomial x_power(int a);
  /// (y^(k))^e
  static Monomial jet(int k, int e = 1);

  int x_exp() const { return x_; }
  int exponent(int k) const {
    return k >= 0 && k < static_cast<int>(e_.size()) ? e_[k] : 0;
  }
  /// Exponents indexed by derivative order; no trailing zeros.
  const std::vector<int>& exponents() const { return e_; }

  /// Highest derivative order present, kNoOrder if none.
  int order() const { return static_cast<int>(e_.size()) - 1; }
  /// Total degree in the jet variables (x not counted).
  int degree() const;
  /// Grading with weight(y^(k)) = k + 1, weight(x) = -1.
  int weight() const;
  bool is_one() const { return x_ == 0 && e_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// Exponent of y^(k) changed by delta; the result must stay >= 0.
  Monomial with_exponent(int k, int delta) const;
  Monomial with_x(int delta) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void trim();

  int x_ = 0;
  std::vector<int> e_;
};

/// Canonical print order: highest derivative order first, then exponent
/// vectors compared from the top order downwards (larger first), then the
/// larger power of x first.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Independent variable of a partial derivative: x or y^(k).
struct Var {
  static Var x() { return Var{true, 0}; }
  static Var y(int k = 0) { return Var{false, k}; }

  bool is_x = false;
  int k = 0;
};

/// Values (y, y', ..., y^(m)) at x0.
struct Jet {
  Rational x0;
  std::vector<Rational> values;

  int order() const { return static_cast<int>(values.size()) - 1; }
};

/// Polynomial in x and the jet variables with exact rational coefficients.
/// Zero coefficients are never stored.
class DiffPoly {
 public:
  using Terms = std::map<Monomial, Rational, CanonicalOrder>;

  DiffPoly() = default;
  DiffPoly(const Rational& c);  // NOLINT: constants embed implicitly

  static DiffPoly x(int power = 1);
  static DiffPoly y(int k = 0, int e = 1);
  static DiffPoly term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  int order() const;
  int max_x_exp() const;
  bool is_constant() const;
  /// Coefficient of the given monomial, zero if absent.
  Rational coefficient(const Monomial& m) const;
  /// Value of the constant monomial.
  Rational constant_term() const { return coefficient(Monomial{}); }

  /// Adds c * m, dropping the entry if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const DiffPoly& o);
  DiffPoly& operator*=(const Rational& c);

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const Rational& c) { return a *= c; }
  friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
  friend DiffPoly operator-(DiffPoly a);

  friend bool operator==(const DiffPoly& a, const DiffPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

DiffPoly pow(const DiffPoly& p, unsigned e);
DiffPoly partial_deriv(const DiffPoly& p, Var v);
/// D = d/dx + sum_k y^(k+1) d/dy^(k)
DiffPoly total_derivative(const DiffPoly& p);
/// Applies D repeatedly.
DiffPoly total_derivative(const DiffPoly& p, int times);

/// Exact value at the jet; throws JetTooShort if the jet is shorter than
/// order(p).
Rational evaluate_jet(const DiffPoly& p, const Jet& jet);

/// Common weight of every monomial; 0 for the zero polynomial. Throws
/// NotHomogeneous naming two monomials of differing weight.
int weight_of(const DiffPoly& p);

/// p with y^(k) -> -y^(k) for every k.
DiffPoly reflect_y(const DiffPoly& p);

/// Coefficients of p as a polynomial in y^(k): result[e] multiplies
/// (y^(k))^e.
std::vector<DiffPoly> coefficients_in(const DiffPoly& p, int k);

}  // namespace diffseq
