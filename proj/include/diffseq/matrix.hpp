#pragma once

#include <vector>

#include "diffseq/diffpoly.hpp"

namespace diffseq {

/// n x n matrix of DiffPolys. Indices are 1-based to match the way the
/// triangular systems are written down.
class TriMatrix {
 public:
  TriMatrix() = default;
  explicit TriMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}

  static TriMatrix identity(int n);

  int n() const { return n_; }
  DiffPoly& operator()(int i, int j) { return cells_[index(i, j)]; }
  const DiffPoly& operator()(int i, int j) const { return cells_[index(i, j)]; }

  bool is_upper_triangular() const;
  friend bool operator==(const TriMatrix&, const TriMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
  }

  int n_ = 0;
  std::vector<DiffPoly> cells_;
};

/// Column of DiffPolys, 1-based.
class PolyVector {
 public:
  PolyVector() = default;
  explicit PolyVector(int n) : entries_(static_cast<std::size_t>(n)) {}

  int n() const { return static_cast<int>(entries_.size()); }
  DiffPoly& operator()(int i) { return entries_[static_cast<std::size_t>(i - 1)]; }
  const DiffPoly& operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<DiffPoly>& entries() const { return entries_; }

  friend PolyVector operator-(PolyVector v) {
    for (auto& e : v.entries_) e = -e;
    return v;
  }
  friend bool operator==(const PolyVector&, const PolyVector&) = default;

 private:
  std::vector<DiffPoly> entries_;
};

using LVector = PolyVector;
/// Entry i is df/dy^(i-1).
using GradientVector = PolyVector;

}  // namespace diffseq
