#pragma once

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "diffseq/matrix.hpp"

namespace diffseq {

/// Execution policy for the data-parallel kernels. The serial variants are
/// the reference implementations; the parallel ones must agree with them
/// exactly.
enum class Exec { serial, parallel };

/// Runs body(i) for i in [0, count). Under Exec::parallel iterations are
/// spread over OpenMP threads; the first exception (lowest index) is
/// rethrown after the loop.
template <class Body>
void run_indexed(std::size_t count, Exec exec, Body&& body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

TriMatrix multiply(const TriMatrix& a, const TriMatrix& b, Exec exec = Exec::serial);
PolyVector multiply(const TriMatrix& a, const PolyVector& v, Exec exec = Exec::serial);

/// Product of two polynomials; the parallel variant splits the terms of a
/// into chunks and merges the partial products.
DiffPoly multiply(const DiffPoly& a, const DiffPoly& b, Exec exec);

/// p evaluated at every jet.
std::vector<Rational> evaluate_many(const DiffPoly& p, std::span<const Jet> jets,
                                    Exec exec = Exec::serial);

/// Solves a x = rhs for upper-triangular a with nonzero constant diagonal by
/// back substitution.
PolyVector solve_upper_triangular(const TriMatrix& a, const PolyVector& rhs);

}  // namespace diffseq
