#include <doctest.h>

#include <random>

#include "diffseq/errors.hpp"
#include "diffseq/integrals.hpp"
#include "diffseq/sequence.hpp"

using namespace diffseq;

namespace {

const DiffPoly Y = DiffPoly::y(0);
const DiffPoly Y1 = DiffPoly::y(1);
const DiffPoly X = DiffPoly::x();

PolyX poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long a : c) v.push_back(Rational(a));
  return PolyX(v);
}

}  // namespace

TEST_CASE("rational functions stay reduced") {
  const RationalFunctionX f(poly({-1, 0, 1}), poly({2, 2}));  // (x^2 - 1)/(2x + 2)
  CHECK(f.num() == PolyX(std::vector<Rational>{make_rational(-1, 2), make_rational(1, 2)}));
  CHECK(f.den() == poly({1}));
  CHECK(RationalFunctionX(poly({1}), poly({0, 1})).derivative() ==
        RationalFunctionX(poly({-1}), poly({0, 0, 1})));
  CHECK_THROWS_AS(RationalFunctionX(poly({1}), poly({0, 1}))(Rational(0)), PoleAtSamplePoint);
}

TEST_CASE("solution jets") {
  const Jet j1 = solution_jet(1, {Rational(1), Rational(1)}, Rational(0));
  CHECK(j1.values == std::vector<Rational>{Rational(1), Rational(-1)});
  CHECK(evaluate_jet(riccati(1), j1) == 0);
  const Jet j2 = solution_jet(2, {Rational(1), Rational(1), Rational(1)}, Rational(0));
  CHECK(j2.values == std::vector<Rational>{Rational(1), Rational(1), Rational(-4)});
  CHECK(evaluate_jet(riccati(2), j2) == 0);
  CHECK_THROWS_AS(solution_jet(1, {Rational(1), Rational(-1)}, Rational(1)), PoleAtSamplePoint);
  CHECK_THROWS_AS(solution_jet(2, {Rational(1)}, Rational(0)), InvalidArgument);
  // Lower degree than n still solves R_n.
  const Jet low = solution_jet(3, {Rational(2), Rational(5), Rational(0), Rational(0)}, Rational(1));
  CHECK(evaluate_jet(riccati(3), low) == 0);
}

TEST_CASE("solutions are invariant under scaling of A") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 5;
    std::vector<Rational> a, scaled;
    long cn = num(rng);
    if (cn == 0) cn = 3;
    const Rational c = make_rational(cn, den(rng));
    for (int i = 0; i <= n; ++i) a.push_back(make_rational(num(rng), den(rng)));
    for (const auto& v : a) scaled.push_back(v * c);
    const Rational x0 = make_rational(num(rng), den(rng));
    if (PolyX(a)(x0) == 0) continue;
    const Jet j = solution_jet(n, a, x0);
    CHECK(j.values == solution_jet(n, scaled, x0).values);
    CHECK(evaluate_jet(riccati(n), j) == 0);
  }
}

TEST_CASE("solution identity") {
  CHECK_NOTHROW(verify_solution_identity(0, poly({3}), 3));
  CHECK_NOTHROW(verify_solution_identity(1, poly({1, 1}), 3));
  CHECK_NOTHROW(verify_solution_identity(3, PolyX(std::vector<Rational>{make_rational(1, 2), Rational(-3), make_rational(7, 3), make_rational(-5, 4)}), 5));
  CHECK_THROWS_AS(verify_solution_identity(2, poly({1, 0, 0, 1}), 3), InvalidArgument);
  // (P'/P)' + (P'/P)^2 = P''/P
  const PolyX p = poly({1, 2, 3});
  const RationalFunctionX y(p.derivative(), p);
  CHECK(y.derivative() + y * y == RationalFunctionX(p.derivative(2), p));
}

TEST_CASE("invariants") {
  const InvariantExpr i11 = invariant(1, 1);
  CHECK(i11.body == ExpDiffPoly(Y, 1));
  CHECK(total_derivative(i11.body) == ExpDiffPoly(riccati(1), 1));
  const InvariantExpr i12 = invariant(1, 2);
  CHECK(i12.body == ExpDiffPoly(X * Y - DiffPoly(Rational(1)), 1));
  CHECK(total_derivative(i12.body) == ExpDiffPoly(X * riccati(1), 1));
  for (int n = 0; n <= 5; ++n) {
    const InvariantExpr last = invariant(n, n + 1);
    const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(last.body.level(1).constant_term() == sign);
    for (int j = 1; j <= n + 1; ++j) CHECK_NOTHROW(verify_invariant(invariant(n, j)));
  }
  CHECK_THROWS_AS(invariant(2, 0), IndexOutOfRange);
  CHECK_THROWS_AS(invariant(2, 4), IndexOutOfRange);
}

TEST_CASE("invariants are constant along solutions") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  for (int n = 1; n <= 4; ++n) {
    std::vector<Rational> a;
    for (int i = 0; i <= n; ++i) a.push_back(make_rational(num(rng), den(rng)));
    if (PolyX(a).is_zero()) continue;
    const PolyX p(a);
    for (int j = 1; j <= n + 1; ++j) {
      const InvariantExpr inv = invariant(n, j);
      std::vector<Rational> values;
      for (long x = -3; x <= 3; ++x) {
        if (p(Rational(x)) == 0) continue;
        values.push_back(evaluate_jet(inv.body, solution_jet(n, a, Rational(x)), p(Rational(x))));
      }
      for (const auto& v : values) CHECK(v == values.front());
    }
  }
}

TEST_CASE("first integrals") {
  const FirstIntegralExpr f = first_integral(1, 1, 2);
  CHECK(f.net_level() == 0);
  CHECK(f.num.body.level(1) == X * Y - DiffPoly(Rational(1)));
  CHECK(f.den.body.level(1) == Y);
  CHECK_NOTHROW(verify_first_integral(f));
  CHECK_THROWS_AS(first_integral(2, 2, 2), IdenticalIndices);
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= n + 1; ++i)
      for (int j = 1; j <= n + 1; ++j)
        if (i != j) {
          const FirstIntegralExpr g = first_integral(n, i, j);
          CHECK(g.num.body.order() <= n - 1);
          CHECK_NOTHROW(verify_first_integral(g));
        }
}

TEST_CASE("combinations") {
  CHECK(combine({{poly({1}), poly({1})}}) == Y + Y1 + Y * Y);
  CHECK(combine({{PolyX(), PolyX(), poly({1})}}) == riccati(2));
  CHECK(combine({{PolyX(), poly({0, 1})}}) == X * (Y1 + Y * Y));
  CHECK_THROWS_AS(combine({{poly({1}), PolyX()}}), InvalidCombination);
  CHECK_THROWS_AS(combine({}), InvalidCombination);
}

TEST_CASE("linearisation") {
  CHECK_NOTHROW(check_linearisation({{poly({1}), poly({1})}}, poly({1, 2, 0, 5}), 4));
  CHECK_NOTHROW(check_linearisation({{PolyX(), PolyX(), poly({1})}}, poly({1, 1, 1}), 4));
  CHECK_NOTHROW(check_linearisation({{poly({0, 1}), poly({2, 0, 1}), poly({-1})}}, poly({3, 1, 0, 0, 2}), 4));
  CHECK_THROWS_AS(check_linearisation({{poly({1}), poly({1})}}, poly({-1, 1}), std::vector<Rational>{Rational(1)}),
                  PoleAtSamplePoint);
  CHECK_THROWS_AS(check_linearisation({{PolyX(), PolyX()}}, poly({1}), 2), InvalidCombination);
}

TEST_CASE("PolyX JSON") {
  const PolyX p(std::vector<Rational>{Rational(-1), Rational(0), make_rational(3, 2)});
  const Json j = to_json(p);
  CHECK(j.dump() == R"({"coeffs":["-1/1","0/1","3/2"]})");
  CHECK(polyx_from_json(j) == p);
  CHECK_THROWS_AS(polyx_from_json(Json::parse("[1]")), ParseError);
}
