#pragma once

#include <deque>
#include <mutex>
#include <vector>

#include "diffseq/exppoly.hpp"

namespace diffseq {

/// Reduction modulo a differential equation y^(n) + r = 0 whose highest
/// derivative enters linearly with coefficient exactly 1. Every y^(n+j) is
/// replaced by the j-th total derivative of -r, itself reduced, so the
/// result has order < n. The substitution chain is built lazily and shared
/// between threads.
class Reducer {
 public:
  /// Throws NonMonicEquation.
  explicit Reducer(DiffPoly equation);

  Reducer(const Reducer&) = delete;
  Reducer& operator=(const Reducer&) = delete;

  const DiffPoly& equation() const { return equation_; }
  int order() const { return n_; }

  DiffPoly reduce(const DiffPoly& p) const;
  ExpDiffPoly reduce(const ExpDiffPoly& p) const;

  /// Reduced value of y^(n+j).
  const DiffPoly& substitution(int j) const;

 private:
  std::vector<const DiffPoly*> chain_upto(int j) const;
  DiffPoly substitute(const DiffPoly& p, const std::vector<const DiffPoly*>& subs) const;

  DiffPoly equation_;
  int n_ = 0;
  mutable std::mutex mutex_;
  mutable std::deque<DiffPoly> chain_;
};

DiffPoly reduce_mod(const DiffPoly& p, const DiffPoly& equation);
ExpDiffPoly reduce_mod(const ExpDiffPoly& p, const DiffPoly& equation);

}  // namespace diffseq
