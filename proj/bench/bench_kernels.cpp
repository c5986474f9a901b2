// Serial reference kernels against their OpenMP counterparts.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "diffseq/integrals.hpp"
#include "diffseq/sequence.hpp"
#include "diffseq/verify.hpp"

using namespace diffseq;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, const std::function<void(Exec)>& f, int reps) {
  const double s = seconds([&] { f(Exec::serial); }, reps);
  const double p = seconds([&] { f(Exec::parallel); }, reps);
  std::printf("%-28s %12.6f %12.6f %8.2fx\n", name, s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 8;
  std::printf("threads %d, n = %d\n", omp_get_max_threads(), n);
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial [s]", "parallel [s]", "speedup");

  const LinearSystem sys = build_linear_system(n);
  row("Q_adj * Q", [&](Exec e) { (void)multiply(sys.q_adj, sys.q, e); }, 3);
  row("Q * L_adj", [&](Exec e) { (void)multiply(sys.q, sys.l_adj, e); }, 3);

  const DiffPoly& a = riccati(n);
  const DiffPoly& b = riccati(n, true);
  row("R_n * A_n", [&](Exec e) { (void)multiply(a, b, e); }, 3);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<Jet> jets;
  while (jets.size() < 2000) {
    std::vector<Rational> coeffs;
    for (int i = 0; i <= n; ++i) coeffs.push_back(make_rational(num(rng), den(rng)));
    const Rational x0 = make_rational(num(rng), den(rng));
    if (PolyX(coeffs)(x0) != 0) jets.push_back(solution_jet(n, coeffs, x0));
  }
  row("R_n on 2000 jets", [&](Exec e) { (void)evaluate_many(a, jets, e); }, 3);

  const int suite_n = std::min(n, 6);
  row("verify all, n <= 6", [&](Exec e) { (void)run_verify(default_suites(), "all", suite_n, 1, e); },
      1);
  return 0;
}
