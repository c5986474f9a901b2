#include <doctest.h>

#include "diffseq/errors.hpp"
#include "diffseq/sequence.hpp"
#include "diffseq/singularity.hpp"

using namespace diffseq;

namespace {

const DiffPoly Y = DiffPoly::y(0);
const DiffPoly Y1 = DiffPoly::y(1);
const DiffPoly Y2 = DiffPoly::y(2);

std::vector<Rational> alphas(const DiffPoly& eq) {
  std::vector<Rational> out;
  for (const auto& b : dominant_balance(eq)) {
    CHECK(b.p == -1);
    out.push_back(b.alpha);
  }
  return out;
}

}  // namespace

TEST_CASE("univariate root extraction") {
  // (t - 1)(t + 2)^2 (2t - 3)
  const UnivariatePoly t = UnivariatePoly::identity();
  const UnivariatePoly p = (t - Rational(1)) * pow(t + Rational(2), 2) * (t * Rational(2) - Rational(3));
  const RootSplit s = rational_roots(p);
  CHECK(s.roots == std::vector<Rational>{Rational(-2), Rational(-2), Rational(1), make_rational(3, 2)});
  CHECK(s.remaining.degree() == 0);
  const RootSplit irr = rational_roots(t * t + Rational(2));
  CHECK(irr.roots.empty());
  CHECK(irr.remaining.degree() == 2);
  CHECK(falling_factorial(Rational(-1), 2) == (t - Rational(1)) * (t - Rational(2)));
}

TEST_CASE("dominant balance") {
  CHECK(alphas(riccati(1)) == std::vector<Rational>{Rational(1)});
  CHECK(dominant_balance(riccati(1))[0].alpha_poly.degree() == 2);
  CHECK(alphas(riccati(2)) == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(alphas(riccati(4)) ==
        std::vector<Rational>{Rational(1), Rational(2), Rational(3), Rational(4)});
  CHECK_THROWS_AS(dominant_balance(Y2 + pow(Y, 3)), IrrationalLeadingCoefficient);
  CHECK_THROWS_AS(dominant_balance(Y1), NoBalance);
  CHECK_THROWS_AS(dominant_balance(Y1 + DiffPoly::x() * Y * Y), InvalidArgument);
}

TEST_CASE("resonance polynomials") {
  const UnivariatePoly r = UnivariatePoly::identity();
  const ResonancePoly q21 = resonance_polynomial(riccati(2), -1, Rational(1));
  CHECK(q21 == r * r - Rational(1));
  CHECK(branch_resonances(q21) == std::vector<int>{-1, 1});
  CHECK(branch_resonances(resonance_polynomial(riccati(1), -1, Rational(1))) == std::vector<int>{-1});
  CHECK(branch_resonances(resonance_polynomial(riccati(2), -1, Rational(2))) ==
        std::vector<int>{-2, -1});
  CHECK(branch_resonances(resonance_polynomial(riccati(4), -1, Rational(2))) ==
        std::vector<int>{-2, -1, 1, 2});
  CHECK(branch_resonances(resonance_polynomial(riccati(3), -1, Rational(2))) ==
        std::vector<int>{-2, -1, 1});
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> want;
    for (int k = n; k >= 1; --k) want.push_back(-k);
    const ResonancePoly q = resonance_polynomial(riccati(n), -1, Rational(n));
    CHECK(q.degree() == n);
    CHECK(branch_resonances(q) == want);
  }
  CHECK_THROWS_AS(resonance_polynomial(riccati(2), -1, Rational(3)), InconsistentBalance);
}

TEST_CASE("non-integer resonances are reported") {
  const DiffPoly eq = Y2 - Y * Y1 * Rational(5) + pow(Y, 3) * Rational(2);
  const auto bal = dominant_balance(eq);
  REQUIRE(bal.size() == 2);
  CHECK(bal[0].alpha == -2);
  CHECK(bal[1].alpha == make_rational(-1, 2));
  CHECK(branch_resonances(resonance_polynomial(eq, -1, Rational(-2))) == std::vector<int>{-6, -1});
  CHECK_THROWS_AS(make_branch(eq, bal[1]), NonIntegerResonance);
}

TEST_CASE("Laurent series and compatibility") {
  const auto bal = dominant_balance(riccati(2));
  const Branch b1 = make_branch(riccati(2), bal[0]);
  const CompatibilityResult c1 = compatibility_test(riccati(2), b1, 3);
  REQUIRE(c1.checks.size() == 1);
  CHECK(c1.passed());
  const ParamPoly c = ParamPoly::param(1);
  CHECK(c1.series.coefficients[0] == ParamPoly(Rational(1)));
  CHECK(c1.series.coefficients[1] == c);
  CHECK(c1.series.coefficients[2] == ParamPoly(Rational(-1)) * (c * c));
  CHECK(c1.series.coefficients[3] == c * c * c);
  for (const auto& r : laurent_residual(riccati(2), c1.series, 4)) CHECK(r.is_zero());

  const Branch b2 = make_branch(riccati(2), bal[1]);
  const CompatibilityResult c2 = compatibility_test(riccati(2), b2, 3);
  CHECK(c2.checks.empty());
  for (int k = 1; k <= 3; ++k) CHECK(c2.series.coefficients[k].is_zero());

  const Branch r1 = make_branch(riccati(1), dominant_balance(riccati(1))[0]);
  CHECK(compatibility_test(riccati(1), r1, 0).passed());

  const Branch b3 = make_branch(riccati(3), dominant_balance(riccati(3))[0]);
  const CompatibilityResult c3 = compatibility_test(riccati(3), b3, 2);
  CHECK(c3.checks.size() == 2);
  CHECK(c3.passed());
  CHECK_THROWS_AS(compatibility_test(riccati(3), b3, 1), InvalidArgument);
}

TEST_CASE("series residual vanishes through the solved orders") {
  for (int n = 2; n <= 5; ++n) {
    const DiffPoly& eq = riccati(n);
    for (const auto& bal : dominant_balance(eq)) {
      const Branch b = make_branch(eq, bal);
      const int depth = n + 1;
      const CompatibilityResult c = compatibility_test(eq, b, depth);
      REQUIRE(c.passed());
      const auto res = laurent_residual(eq, c.series, depth + 1);
      for (const auto& r : res) CHECK(r.is_zero());
    }
  }
}

TEST_CASE("compatibility failure is recorded") {
  const DiffPoly eq = Y2 + Y * Y1 * Rational(3) + pow(Y, 3) + Y * Y;
  const Branch b = make_branch(eq, dominant_balance(eq)[0]);
  REQUIRE(b.alpha == 1);
  const CompatibilityResult c = compatibility_test(eq, b, 1);
  REQUIRE(c.checks.size() == 1);
  CHECK_FALSE(c.passed());
  CHECK(c.checks[0].resonance == 1);
  CHECK(c.checks[0].forcing == ParamPoly(Rational(1)));
}

TEST_CASE("tables") {
  const PainleveReport r4 = painleve_report(4);
  REQUIRE(r4.branches.size() == 4);
  CHECK(display_order(r4.branches[0].resonances) == std::vector<int>{-1, 1, 2, 3});
  CHECK(display_order(r4.branches[1].resonances) == std::vector<int>{-1, 1, 2, -2});
  CHECK(display_order(r4.branches[2].resonances) == std::vector<int>{-1, 1, -2, -3});
  CHECK(display_order(r4.branches[3].resonances) == std::vector<int>{-1, -2, -3, -4});
  CHECK(r4.painleve_pass);
  CHECK(r4.pattern_rule_holds);
  CHECK(r4.closed_form_holds);
  CHECK(render_table_text({r4}) ==
        "R_4   alpha = 1: r = -1,1,2,3\n"
        "      alpha = 2: r = -1,1,2,-2\n"
        "      alpha = 3: r = -1,1,-2,-3\n"
        "      alpha = 4: r = -1,-2,-3,-4\n");
  CHECK(apply_pattern_rule({-1, 1, 2, 3, 4}, 5) == std::vector<int>{-2, -1, 1, 2, 3});
  CHECK(painleve_report(5).branches[1].resonances == std::vector<int>{-2, -1, 1, 2, 3});
  CHECK(render_general_table_text().find("alpha = n: r = -1,-2,...,-n") != std::string::npos);
  const Json j = r4.to_json();
  CHECK(j["n"] == 4);
  CHECK(j["branches"][0]["alpha"] == "1");
  CHECK(j["branches"][0]["p"] == -1);
  CHECK(j["painleve_pass"] == true);
  CHECK(render_table_latex({r4}).find("R_{4} & \\alpha = 1 & r = -1, 1, 2, 3") != std::string::npos);
}
