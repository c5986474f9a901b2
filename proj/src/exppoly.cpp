#include "diffseq/exppoly.hpp"

#include <algorithm>

namespace diffseq {

ExpDiffPoly::ExpDiffPoly(DiffPoly p, int level) {
  if (!p.is_zero()) levels_.emplace(level, std::move(p));
}

DiffPoly ExpDiffPoly::level(int l) const {
  auto it = levels_.find(l);
  return it == levels_.end() ? DiffPoly{} : it->second;
}

int ExpDiffPoly::order() const {
  int o = kNoOrder;
  for (const auto& [l, p] : levels_) o = std::max(o, p.order());
  return o;
}

bool ExpDiffPoly::is_local() const {
  return levels_.empty() || (levels_.size() == 1 && levels_.begin()->first == 0);
}

void ExpDiffPoly::add_level(int l, const DiffPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = levels_.try_emplace(l, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) levels_.erase(it);
  }
}

ExpDiffPoly& ExpDiffPoly::operator+=(const ExpDiffPoly& o) {
  for (const auto& [l, p] : o.levels_) add_level(l, p);
  return *this;
}

ExpDiffPoly& ExpDiffPoly::operator-=(const ExpDiffPoly& o) {
  for (const auto& [l, p] : o.levels_) add_level(l, -p);
  return *this;
}

ExpDiffPoly& ExpDiffPoly::operator*=(const Rational& c) {
  if (c == 0) {
    levels_.clear();
    return *this;
  }
  for (auto& [l, p] : levels_) p *= c;
  return *this;
}

ExpDiffPoly operator*(const ExpDiffPoly& a, const ExpDiffPoly& b) {
  ExpDiffPoly r;
  for (const auto& [la, pa] : a.levels_)
    for (const auto& [lb, pb] : b.levels_) r.add_level(la + lb, pa * pb);
  return r;
}

ExpDiffPoly operator-(ExpDiffPoly a) {
  for (auto& [l, p] : a.levels_) p = -p;
  return a;
}

ExpDiffPoly exp_weight(int l) { return ExpDiffPoly(DiffPoly(Rational(1)), l); }

ExpDiffPoly pow(const ExpDiffPoly& p, unsigned e) {
  ExpDiffPoly result(Rational(1));
  ExpDiffPoly base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

ExpDiffPoly partial_deriv(const ExpDiffPoly& p, Var v) {
  ExpDiffPoly r;
  for (const auto& [l, q] : p.levels()) r += ExpDiffPoly(partial_deriv(q, v), l);
  return r;
}

ExpDiffPoly total_derivative(const ExpDiffPoly& p) {
  ExpDiffPoly r;
  for (const auto& [l, q] : p.levels()) {
    DiffPoly d = total_derivative(q);
    if (l != 0) d += Rational(l) * DiffPoly::y() * q;
    r += ExpDiffPoly(std::move(d), l);
  }
  return r;
}

ExpDiffPoly total_derivative(const ExpDiffPoly& p, int times) {
  ExpDiffPoly r = p;
  for (int i = 0; i < times; ++i) r = total_derivative(r);
  return r;
}

Rational evaluate_jet(const ExpDiffPoly& p, const Jet& jet, const Rational& e_value) {
  Rational sum(0);
  for (const auto& [l, q] : p.levels()) sum += evaluate_jet(q, jet) * power(e_value, l);
  return sum;
}

}  // namespace diffseq
