#include "diffseq/symmetry.hpp"

#include "diffseq/errors.hpp"

namespace diffseq {

PointField::PointField(DiffPoly xi, DiffPoly eta, std::string name)
    : xi_(std::move(xi)), eta_(std::move(eta)), name_(std::move(name)) {
  if (xi_.order() > 0 || eta_.order() > 0)
    throw InvalidArgument("point field components must depend on x and y only");
}

DiffPoly PointField::apply(const DiffPoly& f) const {
  return xi_ * partial_deriv(f, Var::x()) + eta_ * partial_deriv(f, Var::y(0));
}

ProlongedField prolong(const PointField& f, int n) {
  if (n < 0) throw InvalidArgument("prolongation order must be >= 0");
  ProlongedField pf{f.xi(), {ExpDiffPoly(f.eta())}};
  const DiffPoly dxi = total_derivative(f.xi());
  for (int k = 1; k <= n; ++k) {
    ExpDiffPoly next = total_derivative(pf.zeta.back()) - ExpDiffPoly(DiffPoly::y(k) * dxi);
    pf.zeta.push_back(std::move(next));
  }
  return pf;
}

ProlongedField prolong(const EvolutionaryField& f, int n) {
  if (n < 0) throw InvalidArgument("prolongation order must be >= 0");
  ProlongedField pf{DiffPoly{}, {f.q}};
  for (int k = 1; k <= n; ++k) pf.zeta.push_back(total_derivative(pf.zeta.back()));
  return pf;
}

ProlongedField prolong(const Field& f, int n) {
  return std::visit([n](const auto& field) { return prolong(field, n); }, f);
}

ExpDiffPoly apply_generator(const ProlongedField& pf, const ExpDiffPoly& p) {
  if (p.order() > pf.order())
    throw ProlongationTooShort("prolongation of order " + std::to_string(pf.order()) +
                               " applied to an expression of order " +
                               std::to_string(p.order()));
  ExpDiffPoly r = ExpDiffPoly(pf.xi) * partial_deriv(p, Var::x());
  for (int k = 0; k <= p.order(); ++k) {
    ExpDiffPoly d = partial_deriv(p, Var::y(k));
    if (!d.is_zero()) r += pf.zeta[static_cast<std::size_t>(k)] * d;
  }
  return r;
}

std::pair<ExpDiffPoly, ExpDiffPoly> divide_by_equation(const ExpDiffPoly& p,
                                                       const DiffPoly& equation) {
  const int n = equation.order();
  if (n == kNoOrder || !(partial_deriv(equation, Var::y(n)) == DiffPoly(Rational(1))))
    throw NonMonicEquation("divisor must be monic and linear in its top derivative");
  // equation = t - root with t = y^(n); synthetic division by (t - root).
  const DiffPoly root = DiffPoly::y(n) - equation;
  ExpDiffPoly quotient, remainder;
  for (const auto& [l, q] : p.levels()) {
    std::vector<DiffPoly> a = coefficients_in(q, n);
    const int d = static_cast<int>(a.size()) - 1;
    std::vector<DiffPoly> b(static_cast<std::size_t>(std::max(d, 0)));
    DiffPoly carry;
    for (int k = d; k >= 1; --k) {
      carry = a[static_cast<std::size_t>(k)] + root * carry;
      b[static_cast<std::size_t>(k - 1)] = carry;
    }
    DiffPoly rem = a[0] + (d >= 1 ? root * b[0] : DiffPoly{});
    DiffPoly quo;
    for (int k = 0; k < d; ++k)
      quo += DiffPoly::y(n, k) * b[static_cast<std::size_t>(k)];
    quotient += ExpDiffPoly(quo, l);
    remainder += ExpDiffPoly(rem, l);
  }
  return {quotient, remainder};
}

SymmetryCheck check_symmetry(const Field& f, const DiffPoly& equation) {
  const int n = equation.order();
  SymmetryCheck out;
  out.raw = apply_generator(prolong(f, n), ExpDiffPoly(equation));
  const Reducer reducer(equation);
  out.is_symmetry = reducer.reduce(out.raw).is_zero();
  if (out.raw.order() <= n) {
    auto [quotient, remainder] = divide_by_equation(out.raw, equation);
    if (remainder.is_zero()) out.cofactor = quotient;
  }
  return out;
}

SymmetryCheck check_symmetry(const Field& f, int n) { return check_symmetry(f, riccati(n)); }

PointField lie_bracket(const PointField& a, const PointField& b) {
  return PointField(a.apply(b.xi()) - b.apply(a.xi()), a.apply(b.eta()) - b.apply(a.eta()));
}

namespace {
const DiffPoly X = DiffPoly::x();
const DiffPoly Y = DiffPoly::y();
DiffPoly c(long v) { return DiffPoly(Rational(v)); }
}  // namespace

PointField gamma1() { return PointField(c(1), DiffPoly{}, "Gamma1"); }
PointField gamma2() { return PointField(X, -Y, "Gamma2"); }
PointField gamma3(int n) { return PointField(X * X, c(n) - c(2) * X * Y, "Gamma3"); }

std::vector<PointField> second_member_symmetries() {
  const DiffPoly xy = X * Y;
  const DiffPoly q = c(2) + xy * (xy - c(2));  // 2 + xy(xy - 2)
  return {
      PointField(X * X * Y, -(Y * q), "Gamma1"),
      PointField(Y, -pow(Y, 3), "Gamma2"),
      PointField(xy, Y * Y * (c(1) - xy), "Gamma3"),
      PointField(X, -Y, "Gamma4"),
      PointField(pow(X, 3) * (xy - c(2)), -(X * (xy - c(2)) * q), "Gamma5"),
      PointField(-(X * X * (xy - c(2))), xy * (xy - c(2)) * (xy - c(1)), "Gamma6"),
      PointField(X * X, c(2) - c(2) * xy, "Gamma7"),
      PointField(c(1), DiffPoly{}, "Gamma8"),
  };
}

EvolutionaryField delta(int i) {
  if (i < 1) throw InvalidArgument("delta index must be >= 1");
  DiffPoly body = DiffPoly::x(i - 1) * Y;
  if (i >= 2) body -= Rational(i - 1) * DiffPoly::x(i - 2);
  return {ExpDiffPoly(-body, -1), "Delta" + std::to_string(i)};
}

CsgCertificate csg_certify(int n) {
  CsgCertificate cert;
  Report& rep = cert.report;
  rep = Report{"symmetry", "csg_certify", n, {}};
  const LinearSystem s = build_linear_system(n);
  const DiffPoly& target = riccati(n);

  // Q_adj F = L_adj with -1 on the diagonal.
  cert.gradient = solve_upper_triangular(s.q_adj, s.l_adj);
  rep.add("solved Q_adj F = L_adj by back substitution");

  const PolyVector via_matrix = multiply(s.q, s.l_adj);
  for (int i = 1; i <= n; ++i) {
    require_zero(cert.gradient(i) - via_matrix(i), rep.module, rep.operation,
                 "F = Q L_adj at " + std::to_string(i));
    require_zero(cert.gradient(i) + s.l(i), rep.module, rep.operation,
                 "F = -L at " + std::to_string(i));
    // f = y^(n) - R_n, so df/dy^(i-1) = -dR_n/dy^(i-1).
    require_zero(cert.gradient(i) + partial_deriv(target, Var::y(i - 1)), rep.module,
                 rep.operation, "F = grad f at " + std::to_string(i));
  }
  rep.add("F = Q L_adj = -L = -grad R_n");

  cert.f = euler_reconstruct(cert.gradient, n + 1);
  require_zero(cert.f - (DiffPoly::y(n) - target), rep.module, rep.operation,
               "reconstruction");
  rep.add("f rebuilt from F equals y^(n) - R_n");

  DiffPoly first;
  for (int j = 0; j <= n; ++j)
    first += riccati(j, true) * partial_deriv(target, Var::y(j));
  require_zero(first - target, rep.module, rep.operation, "i = 1 relation");
  rep.add("sum_j A_j dR_n/dy^(j) = R_n");

  for (int i = 2; i <= n + 1; ++i) {
    DiffPoly lhs = partial_deriv(target, Var::y(i - 2));
    for (int j = 0; j <= n - i; ++j)
      lhs -= binomial(i + j, j + 1) * (riccati(j, true) * partial_deriv(target, Var::y(i - 1 + j)));
    require_zero(lhs - binomial(n + 1, n - i + 2) * riccati(n - i + 1, true), rep.module,
                 rep.operation, "relation i = " + std::to_string(i));
  }
  rep.add("relations i = 2.." + std::to_string(n + 1));
  return cert;
}

}  // namespace diffseq
