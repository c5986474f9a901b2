#include "diffseq/reduce.hpp"

#include <map>

#include "diffseq/errors.hpp"
#include "diffseq/format.hpp"

namespace diffseq {

Reducer::Reducer(DiffPoly equation) : equation_(std::move(equation)) {
  n_ = equation_.order();
  if (n_ == kNoOrder) throw NonMonicEquation("equation contains no derivative of y");
  DiffPoly lead = partial_deriv(equation_, Var::y(n_));
  if (!(lead == DiffPoly(Rational(1))))
    throw NonMonicEquation("coefficient of y^(" + std::to_string(n_) + ") is " +
                           to_text(lead) + ", expected 1");
  chain_.push_back(DiffPoly::y(n_) - equation_);
}

std::vector<const DiffPoly*> Reducer::chain_upto(int j) const {
  std::lock_guard lock(mutex_);
  while (static_cast<int>(chain_.size()) <= j) {
    // D of an order < n polynomial has order <= n, so only y^(n) needs
    // replacing.
    DiffPoly next = substitute(total_derivative(chain_.back()), {&chain_.front()});
    chain_.push_back(std::move(next));
  }
  std::vector<const DiffPoly*> out;
  for (int i = 0; i <= j; ++i) out.push_back(&chain_[static_cast<std::size_t>(i)]);
  return out;
}

const DiffPoly& Reducer::substitution(int j) const { return *chain_upto(j).back(); }

// subs[j] replaces y^(n+j); higher derivatives are left untouched.
DiffPoly Reducer::substitute(const DiffPoly& p,
                             const std::vector<const DiffPoly*>& subs) const {
  const int max_order = n_ + static_cast<int>(subs.size()) - 1;
  DiffPoly result;
  std::map<std::pair<int, int>, DiffPoly> powers;
  for (const auto& [m, c] : p.terms()) {
    if (m.order() < n_) {
      result.add_term(m, c);
      continue;
    }
    Monomial low = m;
    DiffPoly factor(c);
    for (int k = n_; k <= std::min(m.order(), max_order); ++k) {
      int e = m.exponent(k);
      if (e == 0) continue;
      low = low.with_exponent(k, -e);
      auto key = std::make_pair(k, e);
      auto it = powers.find(key);
      if (it == powers.end())
        it = powers.emplace(key, pow(*subs[static_cast<std::size_t>(k - n_)],
                                     static_cast<unsigned>(e)))
                 .first;
      factor = factor * it->second;
    }
    result += DiffPoly::term(Rational(1), low) * factor;
  }
  return result;
}

DiffPoly Reducer::reduce(const DiffPoly& p) const {
  int top = p.order();
  if (top < n_) return p;
  return substitute(p, chain_upto(top - n_));
}

ExpDiffPoly Reducer::reduce(const ExpDiffPoly& p) const {
  ExpDiffPoly r;
  for (const auto& [l, q] : p.levels()) r += ExpDiffPoly(reduce(q), l);
  return r;
}

DiffPoly reduce_mod(const DiffPoly& p, const DiffPoly& equation) {
  return Reducer(equation).reduce(p);
}

ExpDiffPoly reduce_mod(const ExpDiffPoly& p, const DiffPoly& equation) {
  return Reducer(equation).reduce(p);
}

}  // namespace diffseq
