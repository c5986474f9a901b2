#pragma once

#include "diffseq/kernels.hpp"
#include "diffseq/report.hpp"

namespace diffseq {

/// Member n of the sequence generated by D + y (or D - y when adjoint) from
/// the seed y.
struct SequenceMember {
  int n = 0;
  DiffPoly body;
  bool adjoint = false;
};

SequenceMember generate_member(int n, bool adjoint = false);

/// Memoized left-hand side (D +- y)^n y. n = -1 yields the constant 1.
/// The returned reference stays valid for the life of the program.
const DiffPoly& riccati(int n, bool adjoint = false);

/// d/dy R_{n+1} = (n+2) R_n, and dR_n/dy^(k) = C(n+1, k+1) R_{n-k-1} for
/// k = 0..n.
Report check_gradient_recurrence(int n);

/// R_n = A_n + sum_{i=1}^n C(n+1, i) A_{i-1} R_{n-i}, A being the adjoint
/// members.
Report check_interleave(int n);

struct LinearSystem {
  TriMatrix q;      ///< -1 diagonal, -C(j,i) R_{j-i-1} above it
  TriMatrix q_adj;  ///< -1 diagonal, C(j,i) A_{j-i-1} above it
  LVector l;        ///< C(n+1, i) R_{n-i}
  LVector l_adj;    ///< C(n+1, i) A_{n-i}
};

LinearSystem build_linear_system(int n);

/// Q_adj Q = I, Q L_adj = -L, and reconstruction of R_n from -L through
/// the weighted Euler identity.
Report verify_matrix_lemmas(int n, Exec exec = Exec::serial);

/// (n+1)-weighted Euler sum: (1/(n+1)) sum_k (k+1) y^(k) grad_{k+1}.
DiffPoly euler_reconstruct(const PolyVector& gradient, int weight);

}  // namespace diffseq
