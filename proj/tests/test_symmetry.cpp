#include <doctest.h>

#include "diffseq/errors.hpp"
#include "diffseq/format.hpp"
#include "diffseq/symmetry.hpp"

using namespace diffseq;

namespace {

const DiffPoly Y = DiffPoly::y(0);
const DiffPoly Y1 = DiffPoly::y(1);
const DiffPoly X = DiffPoly::x();

}  // namespace

TEST_CASE("prolongation coefficients") {
  const ProlongedField g1 = prolong(gamma1(), 4);
  for (int k = 0; k <= 4; ++k) CHECK(g1.zeta[k].is_zero());
  const ProlongedField g2 = prolong(gamma2(), 5);
  for (int k = 0; k <= 5; ++k) CHECK(g2.zeta[k] == ExpDiffPoly(DiffPoly::y(k) * Rational(-(k + 1))));
  const PointField g7(X * X, DiffPoly(Rational(2)) - X * Y * Rational(2));
  CHECK(prolong(g7, 1).zeta[1] == ExpDiffPoly(Y * Rational(-2) - X * Y1 * Rational(4)));
  const ProlongedField d1 = prolong(delta(1), 5);
  for (int k = 0; k <= 5; ++k) CHECK(d1.zeta[k] == ExpDiffPoly(-riccati(k, true), -1));
  CHECK_THROWS_AS(PointField(Y1, Y), InvalidArgument);
}

TEST_CASE("generator application") {
  CHECK(apply_generator(prolong(gamma2(), 2), riccati(2)) == ExpDiffPoly(riccati(2) * Rational(-3)));
  CHECK(apply_generator(prolong(gamma3(3), 3), riccati(3)) ==
        ExpDiffPoly(X * riccati(3) * Rational(-8)));
  CHECK(apply_generator(prolong(gamma1(), 4), riccati(4)).is_zero());
  CHECK_THROWS_AS(apply_generator(prolong(gamma2(), 1), riccati(2)), ProlongationTooShort);
}

TEST_CASE("eigen-relations") {
  for (int n = 1; n <= 8; ++n) {
    const SymmetryCheck g2 = check_symmetry(gamma2(), n);
    REQUIRE(g2.cofactor);
    CHECK(g2.is_symmetry);
    CHECK(*g2.cofactor == ExpDiffPoly(Rational(-(n + 1))));
    const SymmetryCheck g3 = check_symmetry(gamma3(n), n);
    REQUIRE(g3.cofactor);
    CHECK(*g3.cofactor == ExpDiffPoly(X * Rational(-2 * (n + 1))));
  }
}

TEST_CASE("non-symmetries are rejected") {
  const PointField scale_y(DiffPoly(), Y);
  const SymmetryCheck c = check_symmetry(scale_y, 2);
  CHECK_FALSE(c.is_symmetry);
  CHECK_FALSE(c.raw.is_zero());
  const PointField wrong_g3 = gamma3(3);
  CHECK_FALSE(check_symmetry(wrong_g3, 2).is_symmetry);
}

TEST_CASE("the eight point symmetries of the second member") {
  const auto fields = second_member_symmetries();
  REQUIRE(fields.size() == 8);
  for (const auto& f : fields) CHECK_MESSAGE(check_symmetry(f, 2).is_symmetry, f.name());
}

TEST_CASE("sl(2,R) brackets") {
  for (int n = 1; n <= 6; ++n) {
    const PointField g1 = gamma1(), g2 = gamma2(), g3 = gamma3(n);
    CHECK(lie_bracket(g1, g2) == g1);
    CHECK(lie_bracket(g1, g3) == PointField(g2.xi() * Rational(2), g2.eta() * Rational(2)));
    CHECK(lie_bracket(g2, g3) == g3);
    const PointField zero = lie_bracket(g2, g2);
    CHECK(zero.xi().is_zero());
    CHECK(zero.eta().is_zero());
  }
}

TEST_CASE("nonlocal symmetries") {
  const SymmetryCheck d11 = check_symmetry(delta(1), 1);
  CHECK(d11.is_symmetry);
  CHECK(d11.raw == ExpDiffPoly(-riccati(1), -1));
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n + 1; ++i) CHECK(check_symmetry(delta(i), n).is_symmetry);
  CHECK_FALSE(check_symmetry(delta(4), 2).is_symmetry);
}

TEST_CASE("division by an equation") {
  const DiffPoly& r2 = riccati(2);
  const ExpDiffPoly p = ExpDiffPoly(X * r2 * DiffPoly::y(2)) + ExpDiffPoly(Y, 1);
  const auto [q, rem] = divide_by_equation(p, r2);
  CHECK(q * ExpDiffPoly(r2) + rem == p);
  CHECK(rem.order() < 2);
}

TEST_CASE("complete symmetry group certificate") {
  const CsgCertificate c1 = csg_certify(1);
  CHECK(c1.gradient(1) == Y * Rational(-2));
  const CsgCertificate c4 = csg_certify(4);
  CHECK(c4.gradient(4) == Y * Rational(-5));
  CHECK(c4.gradient(3) == (Y1 + Y * Y) * Rational(-10));
  CHECK(c4.gradient(2) == riccati(2) * Rational(-10));
  CHECK(c4.gradient(1) == riccati(3) * Rational(-5));
  CHECK(DiffPoly::y(4) - c4.f == riccati(4));
  for (int n = 1; n <= 6; ++n) CHECK_NOTHROW(csg_certify(n));
}
