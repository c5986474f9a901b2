#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diffseq/reduce.hpp"
#include "diffseq/sequence.hpp"

namespace diffseq {

/// xi(x, y) d/dx + eta(x, y) d/dy.
class PointField {
 public:
  /// Throws InvalidArgument if xi or eta involves a derivative of y.
  PointField(DiffPoly xi, DiffPoly eta, std::string name = {});

  const DiffPoly& xi() const { return xi_; }
  const DiffPoly& eta() const { return eta_; }
  const std::string& name() const { return name_; }

  /// Action on a function of (x, y).
  DiffPoly apply(const DiffPoly& f) const;

  /// Compares the vector fields, ignoring names.
  friend bool operator==(const PointField& a, const PointField& b) {
    return a.xi_ == b.xi_ && a.eta_ == b.eta_;
  }

 private:
  DiffPoly xi_;
  DiffPoly eta_;
  std::string name_;
};

/// Q d/dy with a characteristic that may carry exponential weights.
struct EvolutionaryField {
  ExpDiffPoly q;
  std::string name;
};

using Field = std::variant<PointField, EvolutionaryField>;

/// xi d/dx + sum_{k=0}^{order} zeta[k] d/dy^(k).
struct ProlongedField {
  DiffPoly xi;
  std::vector<ExpDiffPoly> zeta;

  int order() const { return static_cast<int>(zeta.size()) - 1; }
};

/// zeta[0] = eta, zeta[k] = D zeta[k-1] - y^(k) D xi.
ProlongedField prolong(const PointField& f, int n);
/// zeta[k] = D^k q.
ProlongedField prolong(const EvolutionaryField& f, int n);
ProlongedField prolong(const Field& f, int n);

/// Throws ProlongationTooShort if order(p) exceeds the prolongation.
ExpDiffPoly apply_generator(const ProlongedField& pf, const ExpDiffPoly& p);

struct SymmetryCheck {
  bool is_symmetry = false;
  /// c with raw = c R_n exactly, when such c exists.
  std::optional<ExpDiffPoly> cofactor;
  ExpDiffPoly raw;
};

/// Applies the n-th prolongation to R_n and reduces modulo R_n.
SymmetryCheck check_symmetry(const Field& f, int n);
SymmetryCheck check_symmetry(const Field& f, const DiffPoly& equation);

/// Quotient and remainder of p by an equation monic and linear in its top
/// derivative, as polynomials in that derivative.
std::pair<ExpDiffPoly, ExpDiffPoly> divide_by_equation(const ExpDiffPoly& p,
                                                       const DiffPoly& equation);

PointField lie_bracket(const PointField& a, const PointField& b);

PointField gamma1();
PointField gamma2();
/// x^2 d/dx + (n - 2xy) d/dy
PointField gamma3(int n);

/// The eight point symmetries of the second member, in the published order.
std::vector<PointField> second_member_symmetries();

/// -E^{-1} (x^{i-1} y - (i-1) x^{i-2}) d/dy, i >= 1.
EvolutionaryField delta(int i);

struct CsgCertificate {
  Report report;
  GradientVector gradient;  ///< df/dy^(i-1) solved from the triangular system
  DiffPoly f;               ///< reconstructed right-hand side
};

/// Shows that the fields delta(1..n+1) fix R_n among all y^(n) = f: solves
/// the unit-triangular system for grad f, checks it against -L and the
/// matrix route, rebuilds f, and checks the i = 1 relation and the family
/// of relations for i >= 2.
CsgCertificate csg_certify(int n);

}  // namespace diffseq
