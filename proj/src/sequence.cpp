#include "diffseq/sequence.hpp"

#include <map>
#include <mutex>

#include "diffseq/errors.hpp"
#include "diffseq/format.hpp"

namespace diffseq {

Json Report::to_json() const {
  Json j;
  j["module"] = module;
  j["operation"] = operation;
  j["n"] = n;
  j["passed"] = true;
  j["checks"] = checks;
  return j;
}

void require_zero(const DiffPoly& residual, const std::string& module,
                  const std::string& operation, const std::string& stage) {
  if (!residual.is_zero()) throw VerificationFailure(module, operation, stage, to_text(residual));
}

void require_zero(const ExpDiffPoly& residual, const std::string& module,
                  const std::string& operation, const std::string& stage) {
  if (!residual.is_zero()) throw VerificationFailure(module, operation, stage, to_text(residual));
}

const DiffPoly& riccati(int n, bool adjoint) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, DiffPoly> memo;
  if (n < -1) throw InvalidArgument("sequence index must be >= -1");
  static const DiffPoly one(Rational(1));
  if (n == -1) return one;

  std::lock_guard lock(mutex);
  auto found = memo.find({n, adjoint});
  if (found != memo.end()) return found->second;
  int start = n;
  while (start > 0 && !memo.count({start - 1, adjoint})) --start;
  DiffPoly current = start == 0 ? DiffPoly::y() : memo.at({start - 1, adjoint});
  const Rational sign = adjoint ? -1 : 1;
  for (int k = start; k <= n; ++k) {
    if (k > 0) current = total_derivative(current) + sign * (DiffPoly::y() * current);
    memo.emplace(std::make_pair(k, adjoint), current);
  }
  return memo.at({n, adjoint});
}

SequenceMember generate_member(int n, bool adjoint) {
  if (n < 0) throw InvalidArgument("sequence index must be >= 0");
  return {n, riccati(n, adjoint), adjoint};
}

Report check_gradient_recurrence(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  Report rep{"sequence", "check_gradient_recurrence", n, {}};
  const DiffPoly& next = riccati(n + 1);
  require_zero(partial_deriv(next, Var::y(0)) - Rational(n + 2) * riccati(n), rep.module,
               rep.operation, "d/dy R_" + std::to_string(n + 1));
  rep.add("d/dy R_" + std::to_string(n + 1) + " = " + std::to_string(n + 2) + " R_" +
          std::to_string(n));
  const DiffPoly& body = riccati(n);
  for (int k = 0; k <= n; ++k) {
    DiffPoly expected = binomial(n + 1, k + 1) * riccati(n - k - 1);
    require_zero(partial_deriv(body, Var::y(k)) - expected, rep.module, rep.operation,
                 "dR_" + std::to_string(n) + "/dy^(" + std::to_string(k) + ")");
  }
  rep.add("dR_n/dy^(k) = C(n+1,k+1) R_(n-k-1) for k = 0.." + std::to_string(n));
  return rep;
}

Report check_interleave(int n) {
  if (n < 0) throw InvalidArgument("n must be >= 0");
  Report rep{"sequence", "check_interleave", n, {}};
  DiffPoly rhs = riccati(n, true);
  for (int i = 1; i <= n; ++i)
    rhs += binomial(n + 1, i) * (riccati(i - 1, true) * riccati(n - i));
  require_zero(riccati(n) - rhs, rep.module, rep.operation, "interleave");
  rep.add("R_n = A_n + sum C(n+1,i) A_(i-1) R_(n-i)");
  return rep;
}

LinearSystem build_linear_system(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  LinearSystem s{TriMatrix(n), TriMatrix(n), LVector(n), LVector(n)};
  for (int i = 1; i <= n; ++i) {
    s.q(i, i) = DiffPoly(Rational(-1));
    s.q_adj(i, i) = DiffPoly(Rational(-1));
    for (int j = i + 1; j <= n; ++j) {
      s.q(i, j) = -binomial(j, i) * riccati(j - i - 1);
      s.q_adj(i, j) = binomial(j, i) * riccati(j - i - 1, true);
    }
    s.l(i) = binomial(n + 1, i) * riccati(n - i);
    s.l_adj(i) = binomial(n + 1, i) * riccati(n - i, true);
  }
  return s;
}

DiffPoly euler_reconstruct(const PolyVector& gradient, int weight) {
  DiffPoly sum;
  for (int k = 0; k < gradient.n(); ++k)
    sum += Rational(k + 1) * (DiffPoly::y(k) * gradient(k + 1));
  return sum * Rational(1, weight);
}

Report verify_matrix_lemmas(int n, Exec exec) {
  Report rep{"sequence", "verify_matrix_lemmas", n, {}};
  const LinearSystem s = build_linear_system(n);

  const TriMatrix prod = multiply(s.q_adj, s.q, exec);
  const TriMatrix id = TriMatrix::identity(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      require_zero(prod(i, j) - id(i, j), rep.module, rep.operation,
                   "Q_adj Q = I at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  rep.add("Q_adj Q = I");

  const PolyVector gradient = multiply(s.q, s.l_adj, exec);
  for (int i = 1; i <= n; ++i)
    require_zero(gradient(i) + s.l(i), rep.module, rep.operation,
                 "Q L_adj = -L at " + std::to_string(i));
  rep.add("Q L_adj = -L");
  rep.add("F = Q L_adj = -L");

  // f = y^(n) - R_n has gradient F = -L, so R_n = y^(n) - Euler(F).
  DiffPoly rebuilt = DiffPoly::y(n) - euler_reconstruct(gradient, n + 1);
  require_zero(rebuilt - riccati(n), rep.module, rep.operation, "Euler reconstruction");
  rep.add("Euler reconstruction of R_n");
  return rep;
}

}  // namespace diffseq
