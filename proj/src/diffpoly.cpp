#include "diffseq/diffpoly.hpp"

#include <algorithm>

#include "diffseq/errors.hpp"
#include "diffseq/format.hpp"

namespace diffseq {

Monomial Monomial::x_power(int a) {
  if (a < 0) throw InvalidArgument("negative power of x");
  Monomial m;
  m.x_ = a;
  return m;
}

Monomial Monomial::jet(int k, int e) {
  if (k < 0 || e < 0) throw InvalidArgument("negative jet index or exponent");
  Monomial m;
  if (e > 0) {
    m.e_.assign(static_cast<std::size_t>(k) + 1, 0);
    m.e_[k] = e;
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : e_) d += e;
  return d;
}

int Monomial::weight() const {
  int w = -x_;
  for (std::size_t k = 0; k < e_.size(); ++k) w += static_cast<int>(k + 1) * e_[k];
  return w;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.x_ = x_ + other.x_;
  m.e_.assign(std::max(e_.size(), other.e_.size()), 0);
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += e_[k];
  for (std::size_t k = 0; k < other.e_.size(); ++k) m.e_[k] += other.e_[k];
  return m;
}

Monomial Monomial::with_exponent(int k, int delta) const {
  Monomial m = *this;
  if (k >= static_cast<int>(m.e_.size())) m.e_.resize(static_cast<std::size_t>(k) + 1, 0);
  m.e_[k] += delta;
  if (m.e_[k] < 0) throw InvalidArgument("negative exponent");
  m.trim();
  return m;
}

Monomial Monomial::with_x(int delta) const {
  Monomial m = *this;
  m.x_ += delta;
  if (m.x_ < 0) throw InvalidArgument("negative power of x");
  return m;
}

void Monomial::trim() {
  while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.order() != b.order()) return a.order() > b.order();
  for (int k = a.order(); k >= 0; --k) {
    int ea = a.exponent(k), eb = b.exponent(k);
    if (ea != eb) return ea > eb;
  }
  return a.x_exp() > b.x_exp();
}

DiffPoly::DiffPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

DiffPoly DiffPoly::x(int power) { return term(Rational(1), Monomial::x_power(power)); }

DiffPoly DiffPoly::y(int k, int e) { return term(Rational(1), Monomial::jet(k, e)); }

DiffPoly DiffPoly::term(const Rational& c, const Monomial& m) {
  DiffPoly p;
  p.add_term(m, c);
  return p;
}

int DiffPoly::order() const {
  int o = kNoOrder;
  for (const auto& [m, c] : terms_) o = std::max(o, m.order());
  return o;
}

int DiffPoly::max_x_exp() const {
  int a = 0;
  for (const auto& [m, c] : terms_) a = std::max(a, m.x_exp());
  return a;
}

bool DiffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational DiffPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& o) {
  *this = *this * o;
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

DiffPoly operator-(DiffPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

DiffPoly pow(const DiffPoly& p, unsigned e) {
  DiffPoly result(Rational(1));
  DiffPoly base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

DiffPoly partial_deriv(const DiffPoly& p, Var v) {
  DiffPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (v.is_x) {
      if (m.x_exp() > 0) r.add_term(m.with_x(-1), c * m.x_exp());
    } else {
      int e = m.exponent(v.k);
      if (e > 0) r.add_term(m.with_exponent(v.k, -1), c * e);
    }
  }
  return r;
}

DiffPoly total_derivative(const DiffPoly& p) {
  DiffPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.x_exp() > 0) r.add_term(m.with_x(-1), c * m.x_exp());
    for (int k = 0; k <= m.order(); ++k) {
      int e = m.exponent(k);
      if (e > 0) r.add_term(m.with_exponent(k, -1).with_exponent(k + 1, 1), c * e);
    }
  }
  return r;
}

DiffPoly total_derivative(const DiffPoly& p, int times) {
  DiffPoly r = p;
  for (int i = 0; i < times; ++i) r = total_derivative(r);
  return r;
}

Rational evaluate_jet(const DiffPoly& p, const Jet& jet) {
  if (p.order() > jet.order())
    throw JetTooShort("jet of order " + std::to_string(jet.order()) +
                      " cannot evaluate a polynomial of order " +
                      std::to_string(p.order()));
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    Rational v = c * power(jet.x0, m.x_exp());
    for (int k = 0; k <= m.order(); ++k)
      if (m.exponent(k) > 0) v *= power(jet.values[k], m.exponent(k));
    sum += v;
  }
  return sum;
}

int weight_of(const DiffPoly& p) {
  if (p.is_zero()) return 0;
  const Monomial& first = p.terms().begin()->first;
  int w = first.weight();
  for (const auto& [m, c] : p.terms()) {
    if (m.weight() != w)
      throw NotHomogeneous("monomials " + to_text(DiffPoly::term(Rational(1), first)) +
                           " (weight " + std::to_string(w) + ") and " +
                           to_text(DiffPoly::term(Rational(1), m)) + " (weight " +
                           std::to_string(m.weight()) + ") differ in weight");
  }
  return w;
}

DiffPoly reflect_y(const DiffPoly& p) {
  DiffPoly r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, m.degree() % 2 ? -c : c);
  return r;
}

std::vector<DiffPoly> coefficients_in(const DiffPoly& p, int k) {
  std::vector<DiffPoly> out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(k);
    if (static_cast<int>(out.size()) <= e) out.resize(static_cast<std::size_t>(e) + 1);
    out[e].add_term(m.with_exponent(k, -e), c);
  }
  return out;
}

}  // namespace diffseq
