#include "diffseq/upoly.hpp"

#include <algorithm>
#include <set>

#include "diffseq/errors.hpp"

namespace diffseq {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UnivariatePoly::UnivariatePoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UnivariatePoly UnivariatePoly::identity() { return UnivariatePoly({Rational(0), Rational(1)}); }

UnivariatePoly UnivariatePoly::linear(const Rational& a) { return UnivariatePoly({a, Rational(1)}); }

void UnivariatePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UnivariatePoly::operator()(const Rational& t) const {
  Rational v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

UnivariatePoly UnivariatePoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::derivative(int times) const {
  UnivariatePoly p = *this;
  for (int i = 0; i < times; ++i) p = p.derivative();
  return p;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UnivariatePoly operator-(UnivariatePoly a) {
  for (auto& v : a.c_) v = -v;
  return a;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UnivariatePoly(std::move(r));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& d) const {
  if (d.is_zero()) throw InvalidArgument("division by the zero polynomial");
  std::vector<Rational> rem = c_;
  const int dd = d.degree();
  std::vector<Rational> quo(std::max(0, degree() - dd + 1));
  for (int k = degree(); k >= dd; --k) {
    Rational f = rem[k] / d.leading();
    quo[k - dd] = f;
    if (f == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= f * d.c_[i];
  }
  return {UnivariatePoly(std::move(quo)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly UnivariatePoly::monic() const {
  if (is_zero()) return *this;
  UnivariatePoly r = *this;
  Rational lead = leading();
  for (auto& v : r.c_) v /= lead;
  return r;
}

UnivariatePoly pow(const UnivariatePoly& p, unsigned e) {
  UnivariatePoly r(Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly u = a, v = b;
  while (!v.is_zero()) {
    UnivariatePoly r = u.divmod(v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

UnivariatePoly falling_factorial(const Rational& shift, int k) {
  UnivariatePoly r(Rational(1));
  for (int i = 0; i < k; ++i) r = r * UnivariatePoly::linear(shift - i);
  return r;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

RootSplit rational_roots(const UnivariatePoly& p) {
  RootSplit out;
  if (p.is_zero()) throw InvalidArgument("roots of the zero polynomial");
  UnivariatePoly rest = p;
  // zero roots
  while (rest.degree() > 0 && rest.coeff(0) == 0) {
    out.roots.push_back(Rational(0));
    rest = rest.divmod(UnivariatePoly::identity()).first;
  }
  if (rest.degree() > 0) {
    // integer coefficients with the same roots
    Integer lcm = 1;
    for (const auto& c : rest.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Integer a0 = Integer(rest.coeff(0) * lcm);
    Integer an = Integer(rest.leading() * lcm);
    std::set<Rational> candidates;
    for (const auto& num : positive_divisors(a0))
      for (const auto& den : positive_divisors(an)) {
        Rational q(num, den);
        q.canonicalize();
        candidates.insert(q);
        candidates.insert(-q);
      }
    for (const auto& cand : candidates) {
      while (rest.degree() > 0 && rest(cand) == 0) {
        out.roots.push_back(cand);
        rest = rest.divmod(UnivariatePoly::linear(-cand)).first;
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.remaining = rest;
  return out;
}

namespace {

std::string upoly_string(const UnivariatePoly& p, const std::string& var, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    Rational a = abs(c);
    std::string mag;
    if (latex && a.get_den() != 1)
      mag = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    else
      mag = a.get_str();
    std::string mono;
    if (k >= 1) mono = var;
    if (k >= 2) mono += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
    if (mono.empty())
      out += mag;
    else if (a == 1)
      out += mono;
    else
      out += mag + (latex ? "" : "*") + mono;
  }
  return out;
}

}  // namespace

std::string to_text(const UnivariatePoly& p, const std::string& var) {
  return upoly_string(p, var, false);
}

std::string to_latex(const UnivariatePoly& p, const std::string& var) {
  return upoly_string(p, var, true);
}

}  // namespace diffseq
