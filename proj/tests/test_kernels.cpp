#include <doctest.h>

#include <random>

#include "diffseq/integrals.hpp"
#include "diffseq/kernels.hpp"
#include "diffseq/sequence.hpp"
#include "diffseq/verify.hpp"

using namespace diffseq;

TEST_CASE("matrix products agree across execution policies") {
  for (int n = 1; n <= 7; ++n) {
    const LinearSystem s = build_linear_system(n);
    CHECK(multiply(s.q_adj, s.q, Exec::serial) == multiply(s.q_adj, s.q, Exec::parallel));
    CHECK(multiply(s.q, s.l_adj, Exec::serial) == multiply(s.q, s.l_adj, Exec::parallel));
  }
}

TEST_CASE("polynomial products agree across execution policies") {
  for (int n = 0; n <= 8; ++n) {
    const DiffPoly& a = riccati(n);
    const DiffPoly& b = riccati(8 - n, true);
    const DiffPoly s = multiply(a, b, Exec::serial);
    CHECK(s == a * b);
    CHECK(s == multiply(a, b, Exec::parallel));
  }
  CHECK(multiply(DiffPoly(), riccati(3), Exec::parallel).is_zero());
}

TEST_CASE("batch evaluation agrees across execution policies") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<Jet> jets;
  for (int t = 0; t < 64; ++t) {
    Jet j{Rational(0), {}};
    for (int k = 0; k <= 6; ++k) j.values.push_back(make_rational(num(rng), den(rng)));
    jets.push_back(j);
  }
  const auto s = evaluate_many(riccati(6), jets, Exec::serial);
  CHECK(s == evaluate_many(riccati(6), jets, Exec::parallel));
  for (std::size_t t = 0; t < jets.size(); ++t) CHECK(s[t] == evaluate_jet(riccati(6), jets[t]));
}

TEST_CASE("run_indexed rethrows the first failure") {
  std::vector<int> hits(10, 0);
  CHECK_THROWS_WITH(run_indexed(10, Exec::parallel,
                                [&](std::size_t i) {
                                  hits[i] = 1;
                                  if (i == 3 || i == 7) throw std::runtime_error(std::to_string(i));
                                }),
                    "3");
  CHECK(std::count(hits.begin(), hits.end(), 1) == 10);
}

TEST_CASE("back substitution") {
  const LinearSystem s = build_linear_system(4);
  const PolyVector f = solve_upper_triangular(s.q_adj, s.l_adj);
  CHECK(multiply(s.q_adj, f) == s.l_adj);
}

TEST_CASE("suite results do not depend on scheduling") {
  const Json a = run_verify(default_suites(), "all", 3, 42, Exec::serial);
  const Json b = run_verify(default_suites(), "all", 3, 42, Exec::parallel);
  CHECK(a.dump() == b.dump());
}
