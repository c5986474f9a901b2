#include "diffseq/integrals.hpp"

#include <algorithm>

#include "diffseq/errors.hpp"
#include "diffseq/format.hpp"
#include "diffseq/kernels.hpp"
#include "diffseq/reduce.hpp"
#include "diffseq/sequence.hpp"

namespace diffseq {

namespace {

const char* kModule = "integrals";

}  // namespace

// RationalFunctionX ------------------------------------------------------------

RationalFunctionX::RationalFunctionX(const PolyX& num) : num_(num), den_(Rational(1)) {}

RationalFunctionX::RationalFunctionX(PolyX num, PolyX den) {
  if (den.is_zero()) throw InvalidArgument("zero denominator");
  if (num.is_zero()) {
    den_ = Rational(1);
    return;
  }
  PolyX g = gcd(num, den);
  num = num.divmod(g).first;
  den = den.divmod(g).first;
  const Rational lead = den.leading();
  num_ = num * PolyX(Rational(1 / lead));
  den_ = den * PolyX(Rational(1 / lead));
}

Rational RationalFunctionX::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d == 0) throw PoleAtSamplePoint("denominator vanishes at x = " + x.get_str());
  return num_(x) / d;
}

RationalFunctionX RationalFunctionX::derivative() const {
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFunctionX operator+(const RationalFunctionX& a, const RationalFunctionX& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunctionX operator-(const RationalFunctionX& a, const RationalFunctionX& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunctionX operator*(const RationalFunctionX& a, const RationalFunctionX& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunctionX operator/(const RationalFunctionX& a, const RationalFunctionX& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string to_text(const RationalFunctionX& f) {
  if (f.den() == PolyX(Rational(1))) return to_text(f.num());
  return "(" + to_text(f.num()) + ")/(" + to_text(f.den()) + ")";
}

// Solutions ------------------------------------------------------------------

Jet riccati_jet(const PolyX& p, int order, const Rational& x0) {
  if (order < 0) throw InvalidArgument("order must be >= 0");
  const Rational p0 = p(x0);
  if (p0 == 0) throw PoleAtSamplePoint("P vanishes at x0 = " + x0.get_str());
  // y^(k) = N_k / P^(k+1)
  const PolyX dp = p.derivative();
  PolyX num = dp;
  Jet jet{x0, {}};
  Rational pk = p0;
  for (int k = 0; k <= order; ++k) {
    jet.values.push_back(num(x0) / pk);
    pk *= p0;
    num = num.derivative() * p - PolyX(Rational(k + 1)) * num * dp;
  }
  return jet;
}

Jet solution_jet(int n, const std::vector<Rational>& a, const Rational& x0) {
  if (n < 0) throw InvalidArgument("n must be >= 0");
  if (static_cast<int>(a.size()) != n + 1)
    throw InvalidArgument("expected " + std::to_string(n + 1) + " coefficients, got " +
                          std::to_string(a.size()));
  return riccati_jet(PolyX(a), n, x0);
}

namespace {

// Integer points 0, 1, -1, 2, -2, ... where P does not vanish.
std::vector<Rational> regular_points(const PolyX& p, int count) {
  std::vector<Rational> out;
  for (long k = 0; static_cast<int>(out.size()) < count; ++k) {
    const Rational x(k % 2 ? (k + 1) / 2 : -k / 2);
    if (p(x) != 0) out.push_back(x);
  }
  return out;
}

void require_equal(const RationalFunctionX& lhs, const RationalFunctionX& rhs,
                   const std::string& operation, const std::string& stage) {
  if (!(lhs == rhs)) throw VerificationFailure(kModule, operation, stage, to_text(lhs - rhs));
}

void require_value(const Rational& lhs, const Rational& rhs, const std::string& operation,
                   const std::string& stage) {
  if (lhs != rhs)
    throw VerificationFailure(kModule, operation, stage, Rational(lhs - rhs).get_str());
}

}  // namespace

Report verify_solution_identity(int n, const PolyX& p, int samples) {
  const std::string op = "verify_solution_identity";
  if (n < 0) throw InvalidArgument("n must be >= 0");
  if (p.is_zero()) throw InvalidArgument("P must be nonzero");
  if (p.degree() > n)
    throw InvalidArgument("deg P = " + std::to_string(p.degree()) + " exceeds n = " +
                          std::to_string(n));
  Report rep{kModule, op, n, {}};
  const RationalFunctionX y(p.derivative(), p);
  RationalFunctionX current = y;
  for (int k = 0; k <= n; ++k) {
    require_equal(current, RationalFunctionX(p.derivative(k + 1), p), op,
                  "k=" + std::to_string(k));
    current = current.derivative() + y * current;
  }
  rep.add("(D+y)^k(P'/P) = P^(k+1)/P for k = 0.." + std::to_string(n));

  const std::vector<Rational> points = regular_points(p, samples);
  std::vector<Jet> jets;
  for (const auto& x0 : points) jets.push_back(riccati_jet(p, n, x0));
  const auto values = evaluate_many(riccati(n), jets, Exec::parallel);
  for (std::size_t s = 0; s < values.size(); ++s)
    require_value(values[s], 0, op, "sample x0=" + points[s].get_str());
  rep.add("R_n vanishes at " + std::to_string(points.size()) + " sample points");
  return rep;
}

// Invariants -----------------------------------------------------------------

InvariantExpr invariant(int n, int j) {
  if (n < 0) throw InvalidArgument("n must be >= 0");
  if (j < 1 || j > n + 1)
    throw IndexOutOfRange("j = " + std::to_string(j) + " outside 1.." + std::to_string(n + 1));
  DiffPoly body;
  for (int i = 1; i <= j; ++i) {
    const Rational c = Rational(i % 2 ? 1 : -1) / factorial(j - i);
    body += riccati(n - i) * DiffPoly::x(j - i) * c;
  }
  return {n, j, ExpDiffPoly(body, 1)};
}

Report verify_invariant(const InvariantExpr& inv) {
  Report rep{kModule, "invariant", inv.n, {}};
  require_zero(reduce_mod(total_derivative(inv.body), riccati(inv.n)), kModule, "invariant",
               "D(I_" + std::to_string(inv.j) + ")");
  rep.add("D(I_" + std::to_string(inv.j) + ") = 0 mod R_" + std::to_string(inv.n));
  return rep;
}

int FirstIntegralExpr::net_level() const {
  auto level = [](const ExpDiffPoly& p) {
    if (p.levels().size() != 1) throw InvalidArgument("invariant must sit at one level");
    return p.levels().begin()->first;
  };
  return level(num.body) - level(den.body);
}

FirstIntegralExpr first_integral(int n, int i, int j) {
  if (i == j) throw IdenticalIndices("i = j = " + std::to_string(i));
  return {invariant(n, j), invariant(n, i)};
}

Report verify_first_integral(const FirstIntegralExpr& f) {
  const std::string op = "first_integral";
  const std::string name = "F(" + std::to_string(f.den.j) + "," + std::to_string(f.num.j) + ")";
  Report rep{kModule, op, f.num.n, {}};
  if (f.net_level() != 0)
    throw VerificationFailure(kModule, op, name + " level",
                              "net exponential level " + std::to_string(f.net_level()));
  const ExpDiffPoly& a = f.num.body;
  const ExpDiffPoly& b = f.den.body;
  const ExpDiffPoly residual = total_derivative(a) * b - a * total_derivative(b);
  require_zero(reduce_mod(residual, riccati(f.num.n)), kModule, op, name);
  rep.add("D" + name + " = 0 mod R_" + std::to_string(f.num.n));
  return rep;
}

// Combinations ---------------------------------------------------------------

namespace {

DiffPoly as_diffpoly(const PolyX& f) {
  DiffPoly out;
  for (int k = 0; k <= f.degree(); ++k)
    if (f.coeff(k) != 0) out += DiffPoly::x(k) * f.coeff(k);
  return out;
}

void require_valid(const CombinationSpec& spec) {
  if (spec.f.empty()) throw InvalidCombination("no coefficients");
  if (spec.f.back().is_zero())
    throw InvalidCombination("leading coefficient f_" + std::to_string(spec.n()) + " is zero");
}

// Numerator of e at y = P'/P over the common denominator P^W, W the largest
// jet weight of a monomial of e; y^(k) = N_k / P^(k+1).
struct Substituted {
  PolyX num;
  int weight = 0;
};

Substituted substitute_solution(const DiffPoly& e, const PolyX& p) {
  const int order = std::max(e.order(), 0);
  const PolyX dp = p.derivative();
  std::vector<PolyX> n{dp};
  for (int k = 0; k < order; ++k)
    n.push_back(n[k].derivative() * p - PolyX(Rational(k + 1)) * n[k] * dp);

  Substituted out;
  for (const auto& [m, c] : e.terms()) out.weight = std::max(out.weight, m.weight() + m.x_exp());
  std::vector<PolyX> p_pow{PolyX(Rational(1))};
  while (static_cast<int>(p_pow.size()) <= out.weight) p_pow.push_back(p_pow.back() * p);

  for (const auto& [m, c] : e.terms()) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(m.x_exp()) + 1, Rational(0));
    coeffs.back() = c;
    PolyX term(coeffs);
    for (int k = 0; k <= m.order(); ++k)
      if (m.exponent(k) > 0) term = term * pow(n[k], static_cast<unsigned>(m.exponent(k)));
    out.num += term * p_pow[out.weight - (m.weight() + m.x_exp())];
  }
  return out;
}

}  // namespace

DiffPoly combine(const CombinationSpec& spec) {
  require_valid(spec);
  DiffPoly out;
  for (int i = 0; i <= spec.n(); ++i)
    if (!spec.f[i].is_zero()) out += as_diffpoly(spec.f[i]) * riccati(i);
  return out;
}

Report check_linearisation(const CombinationSpec& spec, const PolyX& p,
                           const std::vector<Rational>& points) {
  const std::string op = "check_linearisation";
  const DiffPoly e = combine(spec);
  if (p.is_zero()) throw InvalidArgument("P must be nonzero");
  Report rep{kModule, op, spec.n(), {}};

  PolyX linear;
  for (int i = 0; i <= spec.n(); ++i) linear += spec.f[i] * p.derivative(i + 1);
  const RationalFunctionX expected(linear, p);
  // num / P^W = linear / P, cross-multiplied
  const Substituted sub = substitute_solution(e, p);
  const PolyX lhs = sub.num * p;
  const PolyX rhs = linear * pow(p, static_cast<unsigned>(sub.weight));
  if (!(lhs == rhs))
    throw VerificationFailure(kModule, op, "symbolic",
                              to_text(RationalFunctionX(lhs - rhs, pow(p, sub.weight + 1))));
  rep.add("E_n(P'/P) = (sum f_i P^(i+1))/P");

  std::vector<Jet> jets;
  for (const auto& x0 : points) jets.push_back(riccati_jet(p, std::max(e.order(), 0), x0));
  const auto values = evaluate_many(e, jets, Exec::parallel);
  for (std::size_t s = 0; s < values.size(); ++s)
    require_value(values[s], expected(points[s]), op, "sample x0=" + points[s].get_str());
  rep.add("agreement at " + std::to_string(points.size()) + " sample points");
  return rep;
}

Report check_linearisation(const CombinationSpec& spec, const PolyX& p, int samples) {
  if (p.is_zero()) throw InvalidArgument("P must be nonzero");
  return check_linearisation(spec, p, regular_points(p, samples));
}

Json to_json(const PolyX& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_fraction_string(c));
  Json j;
  j["coeffs"] = arr;
  return j;
}

PolyX polyx_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("expected an object with a \"coeffs\" array", 0, {"coeffs"});
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw ParseError("coefficient must be a string", 0, {"\"p/q\""});
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return PolyX(coeffs);
}

}  // namespace diffseq
