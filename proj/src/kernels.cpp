#include "diffseq/kernels.hpp"

#include <omp.h>

#include <algorithm>

#include "diffseq/errors.hpp"

namespace diffseq {

TriMatrix TriMatrix::identity(int n) {
  TriMatrix m(n);
  for (int i = 1; i <= n; ++i) m(i, i) = DiffPoly(Rational(1));
  return m;
}

bool TriMatrix::is_upper_triangular() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

TriMatrix multiply(const TriMatrix& a, const TriMatrix& b, Exec exec) {
  if (a.n() != b.n()) throw InvalidArgument("matrix dimensions differ");
  const int n = a.n();
  TriMatrix c(n);
  run_indexed(static_cast<std::size_t>(n) * n, exec, [&](std::size_t idx) {
    int i = static_cast<int>(idx) / n + 1;
    int j = static_cast<int>(idx) % n + 1;
    DiffPoly sum;
    for (int k = 1; k <= n; ++k) {
      const DiffPoly& x = a(i, k);
      const DiffPoly& y = b(k, j);
      if (!x.is_zero() && !y.is_zero()) sum += x * y;
    }
    c(i, j) = std::move(sum);
  });
  return c;
}

PolyVector multiply(const TriMatrix& a, const PolyVector& v, Exec exec) {
  if (a.n() != v.n()) throw InvalidArgument("matrix and vector dimensions differ");
  const int n = a.n();
  PolyVector out(n);
  run_indexed(static_cast<std::size_t>(n), exec, [&](std::size_t idx) {
    int i = static_cast<int>(idx) + 1;
    DiffPoly sum;
    for (int k = 1; k <= n; ++k)
      if (!a(i, k).is_zero() && !v(k).is_zero()) sum += a(i, k) * v(k);
    out(i) = std::move(sum);
  });
  return out;
}

DiffPoly multiply(const DiffPoly& a, const DiffPoly& b, Exec exec) {
  if (exec == Exec::serial) return a * b;
  std::vector<std::pair<Monomial, Rational>> lhs(a.terms().begin(), a.terms().end());
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(lhs.size(), omp_get_max_threads() * 4));
  std::vector<DiffPoly> partial(chunks);
  run_indexed(chunks, Exec::parallel, [&](std::size_t c) {
    DiffPoly acc;
    for (std::size_t t = c; t < lhs.size(); t += chunks)
      for (const auto& [mb, cb] : b.terms()) acc.add_term(lhs[t].first * mb, lhs[t].second * cb);
    partial[c] = std::move(acc);
  });
  // pairwise merge keeps the additions balanced
  for (std::size_t stride = 1; stride < chunks; stride *= 2) {
    const std::size_t pairs = (chunks + 2 * stride - 1) / (2 * stride);
    run_indexed(pairs, Exec::parallel, [&](std::size_t p) {
      std::size_t lo = p * 2 * stride, hi = lo + stride;
      if (hi < chunks) partial[lo] += partial[hi];
    });
  }
  return partial.front();
}

std::vector<Rational> evaluate_many(const DiffPoly& p, std::span<const Jet> jets, Exec exec) {
  std::vector<Rational> out(jets.size());
  run_indexed(jets.size(), exec, [&](std::size_t i) { out[i] = evaluate_jet(p, jets[i]); });
  return out;
}

PolyVector solve_upper_triangular(const TriMatrix& a, const PolyVector& rhs) {
  const int n = a.n();
  if (rhs.n() != n) throw InvalidArgument("matrix and vector dimensions differ");
  PolyVector x(n);
  for (int i = n; i >= 1; --i) {
    const DiffPoly& diag = a(i, i);
    if (!diag.is_constant() || diag.is_zero())
      throw InvalidArgument("diagonal entry must be a nonzero constant");
    DiffPoly r = rhs(i);
    for (int j = i + 1; j <= n; ++j)
      if (!a(i, j).is_zero()) r -= a(i, j) * x(j);
    x(i) = r * Rational(1 / diag.constant_term());
  }
  return x;
}

}  // namespace diffseq
