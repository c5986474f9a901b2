#pragma once

#include <map>

#include "diffseq/diffpoly.hpp"

namespace diffseq {

/// sum_l p_l * E^l with E = exp[int y dx] a formal symbol: dE/dy^(k) = 0
/// and D(E^l) = l * y * E^l. Level 0 embeds DiffPoly. Empty levels are
/// never stored.
class ExpDiffPoly {
 public:
  using Levels = std::map<int, DiffPoly>;

  ExpDiffPoly() = default;
  ExpDiffPoly(DiffPoly p, int level = 0);  // NOLINT: DiffPoly embeds
  ExpDiffPoly(const Rational& c) : ExpDiffPoly(DiffPoly(c)) {}  // NOLINT

  bool is_zero() const { return levels_.empty(); }
  const Levels& levels() const { return levels_; }
  /// The DiffPoly at level l (zero if absent).
  DiffPoly level(int l) const;
  int order() const;
  /// True when every level is zero except possibly level 0.
  bool is_local() const;

  ExpDiffPoly& operator+=(const ExpDiffPoly& o);
  ExpDiffPoly& operator-=(const ExpDiffPoly& o);
  ExpDiffPoly& operator*=(const Rational& c);

  friend ExpDiffPoly operator+(ExpDiffPoly a, const ExpDiffPoly& b) {
    return a += b;
  }
  friend ExpDiffPoly operator-(ExpDiffPoly a, const ExpDiffPoly& b) {
    return a -= b;
  }
  friend ExpDiffPoly operator*(const ExpDiffPoly& a, const ExpDiffPoly& b);
  friend ExpDiffPoly operator*(ExpDiffPoly a, const Rational& c) {
    return a *= c;
  }
  friend ExpDiffPoly operator*(const Rational& c, ExpDiffPoly a) {
    return a *= c;
  }
  friend ExpDiffPoly operator-(ExpDiffPoly a);
  friend bool operator==(const ExpDiffPoly& a, const ExpDiffPoly& b) {
    return a.levels_ == b.levels_;
  }

 private:
  void add_level(int l, const DiffPoly& p);

  Levels levels_;
};

/// E^l as an ExpDiffPoly.
ExpDiffPoly exp_weight(int l);

ExpDiffPoly pow(const ExpDiffPoly& p, unsigned e);
ExpDiffPoly partial_deriv(const ExpDiffPoly& p, Var v);
ExpDiffPoly total_derivative(const ExpDiffPoly& p);
ExpDiffPoly total_derivative(const ExpDiffPoly& p, int times);

/// Each level l is multiplied by e_value^l.
Rational evaluate_jet(const ExpDiffPoly& p, const Jet& jet,
                      const Rational& e_value);

}  // namespace diffseq
