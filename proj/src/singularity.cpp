#include "diffseq/singularity.hpp"

#include <algorithm>
#include <set>

#include "diffseq/errors.hpp"
#include "diffseq/format.hpp"
#include "diffseq/sequence.hpp"

namespace diffseq {

// ParamPoly ------------------------------------------------------------------

ParamPoly::ParamPoly(const Rational& c) {
  if (c != 0) terms_.emplace(std::vector<int>{}, c);
}

ParamPoly ParamPoly::param(int resonance) {
  if (resonance < 0) throw InvalidArgument("parameter index must be >= 0");
  std::vector<int> e(static_cast<std::size_t>(resonance) + 1, 0);
  e.back() = 1;
  ParamPoly p;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

void ParamPoly::add(const std::vector<int>& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

std::string ParamPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "c" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    Rational a = abs(c);
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

// Balances -------------------------------------------------------------------

namespace {

void require_autonomous(const DiffPoly& eq) {
  if (eq.max_x_exp() > 0) throw InvalidArgument("equation must be autonomous in x");
}

// Exponent of chi produced by monomial m under y ~ chi^p.
long chi_exponent(const Monomial& m, int p) {
  long s = 0;
  for (int k = 0; k <= m.order(); ++k) s += static_cast<long>(m.exponent(k)) * (p - k);
  return s;
}

long min_exponent(const DiffPoly& eq, int p) {
  long lo = 0;
  bool first = true;
  for (const auto& [m, c] : eq.terms()) {
    long e = chi_exponent(m, p);
    if (first || e < lo) lo = e;
    first = false;
  }
  return lo;
}

// prod_k fall(p, k)^{e_k}
Rational leading_factor(const Monomial& m, int p) {
  Rational f(1);
  for (int k = 0; k <= m.order(); ++k)
    if (m.exponent(k) > 0) f *= power(falling_factorial(p, k)(0), m.exponent(k));
  return f;
}

UnivariatePoly alpha_polynomial(const DiffPoly& eq, int p) {
  const long lo = min_exponent(eq, p);
  UnivariatePoly poly;
  for (const auto& [m, c] : eq.terms()) {
    if (chi_exponent(m, p) != lo) continue;
    std::vector<Rational> coeffs(static_cast<std::size_t>(m.degree()) + 1);
    coeffs.back() = c * leading_factor(m, p);
    poly += UnivariatePoly(std::move(coeffs));
  }
  return poly;
}

}  // namespace

std::vector<Balance> dominant_balance(const DiffPoly& equation) {
  require_autonomous(equation);
  std::set<int> candidates;
  for (auto a = equation.terms().begin(); a != equation.terms().end(); ++a)
    for (auto b = std::next(a); b != equation.terms().end(); ++b) {
      // deg_a p + s_a = deg_b p + s_b with s = -sum k e_k
      long da = a->first.degree(), db = b->first.degree();
      if (da == db) continue;
      long sa = chi_exponent(a->first, 0), sb = chi_exponent(b->first, 0);
      long num = sb - sa, den = da - db;
      if (num % den == 0) candidates.insert(static_cast<int>(num / den));
    }

  std::vector<Balance> out;
  bool balanced = false;
  for (int p : candidates) {
    const long lo = min_exponent(equation, p);
    int dominant = 0;
    for (const auto& [m, c] : equation.terms())
      if (chi_exponent(m, p) == lo) ++dominant;
    if (dominant < 2) continue;
    balanced = true;
    UnivariatePoly apoly = alpha_polynomial(equation, p);
    if (apoly.is_zero()) continue;
    for (const auto& root : rational_roots(apoly).roots) {
      if (root == 0) continue;
      if (!out.empty() && out.back().p == p && out.back().alpha == root) continue;
      out.push_back(Balance{p, root, apoly});
    }
  }
  if (!balanced) throw NoBalance("no integer exponent balances two terms of " + to_text(equation));
  if (out.empty())
    throw IrrationalLeadingCoefficient("no nonzero rational leading coefficient for " +
                                       to_text(equation));
  return out;
}

ResonancePoly resonance_polynomial(const DiffPoly& equation, int p, const Rational& alpha) {
  require_autonomous(equation);
  if (alpha == 0 || alpha_polynomial(equation, p)(alpha) != 0)
    throw InconsistentBalance("(p, alpha) = (" + std::to_string(p) + ", " + alpha.get_str() +
                              ") is not a leading-order balance");
  const long lo = min_exponent(equation, p);
  ResonancePoly q;
  for (const auto& [m, c] : equation.terms()) {
    if (chi_exponent(m, p) != lo) continue;
    for (int k = 0; k <= m.order(); ++k) {
      const int e = m.exponent(k);
      if (e == 0) continue;
      // d/dy^(k) of the monomial at the leading solution, times the
      // derivative factor of chi^(p+r).
      Rational factor = c * e;
      for (int j = 0; j <= m.order(); ++j) {
        int ej = m.exponent(j) - (j == k ? 1 : 0);
        if (ej > 0) factor *= power(alpha * falling_factorial(p, j)(0), ej);
      }
      // fall(p + r, k) as a polynomial in r
      q += UnivariatePoly(factor) * falling_factorial(Rational(p), k);
    }
  }
  if (q.is_zero()) throw InconsistentBalance("linearized leading terms cancel identically");
  return q;
}

}  // namespace diffseq

namespace diffseq {

std::vector<int> branch_resonances(const ResonancePoly& q) {
  RootSplit split = rational_roots(q);
  if (split.remaining.degree() > 0)
    throw NonIntegerResonance("factor " + to_text(split.remaining, "r") +
                              " has no rational roots");
  std::vector<int> out;
  for (const auto& root : split.roots) {
    if (root.get_den() != 1)
      throw NonIntegerResonance("resonance " + root.get_str() + " is not an integer");
    out.push_back(static_cast<int>(root.get_num().get_si()));
  }
  return out;
}

bool Branch::compatible() const {
  return std::all_of(compatibility.begin(), compatibility.end(),
                     [](const ResonanceCheck& c) { return c.pass; });
}

bool CompatibilityResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ResonanceCheck& c) { return c.pass; });
}

Branch make_branch(const DiffPoly& equation, const Balance& balance) {
  Branch b;
  b.p = balance.p;
  b.alpha = balance.alpha;
  b.resonance_poly = resonance_polynomial(equation, balance.p, balance.alpha);
  b.resonances = branch_resonances(b.resonance_poly);
  return b;
}

std::vector<ParamPoly> laurent_residual(const DiffPoly& equation, const LaurentSeries& series,
                                        int count) {
  require_autonomous(equation);
  std::vector<ParamPoly> total(static_cast<std::size_t>(std::max(count, 0)));
  const int p = series.p;
  const long lo = min_exponent(equation, p);
  const int terms = static_cast<int>(series.coefficients.size());
  for (const auto& [m, c] : equation.terms()) {
    const long offset = chi_exponent(m, p) - lo;
    const long len = count - offset;
    if (len <= 0) continue;
    std::vector<ParamPoly> prod(static_cast<std::size_t>(len));
    prod[0] = ParamPoly(Rational(1));
    for (int j = 0; j <= m.order(); ++j) {
      if (m.exponent(j) == 0) continue;
      // y^(j) = sum_i a_i fall(p+i, j) chi^(p+i-j)
      std::vector<ParamPoly> factor(static_cast<std::size_t>(len));
      for (int i = 0; i < std::min<long>(len, terms); ++i)
        factor[i] = series.coefficients[i] * falling_factorial(Rational(p + i), j)(0);
      for (int rep = 0; rep < m.exponent(j); ++rep) {
        std::vector<ParamPoly> next(static_cast<std::size_t>(len));
        for (long a = 0; a < len; ++a) {
          if (prod[a].is_zero()) continue;
          for (long b = 0; a + b < len; ++b)
            if (!factor[b].is_zero()) next[a + b] += prod[a] * factor[b];
        }
        prod = std::move(next);
      }
    }
    for (long i = 0; i < len; ++i) total[offset + i] += prod[i] * c;
  }
  return total;
}

CompatibilityResult compatibility_test(const DiffPoly& equation, const Branch& branch,
                                       int depth) {
  std::map<int, int> positive;
  for (int r : branch.resonances)
    if (r > 0) ++positive[r];
  for (const auto& [r, mult] : positive)
    if (mult > 1)
      throw RepeatedResonance("positive resonance " + std::to_string(r) + " has multiplicity " +
                              std::to_string(mult));
  const int needed = positive.empty() ? 0 : positive.rbegin()->first;
  if (depth < needed)
    throw InvalidArgument("depth " + std::to_string(depth) +
                          " is below the largest positive resonance " + std::to_string(needed));

  CompatibilityResult out;
  out.series.p = branch.p;
  out.series.coefficients.push_back(ParamPoly(branch.alpha));
  for (int k = 1; k <= depth; ++k) {
    const ParamPoly forcing = laurent_residual(equation, out.series, k + 1)[k];
    const Rational qk = branch.resonance_poly(Rational(k));
    if (qk != 0) {
      out.series.coefficients.push_back(forcing * Rational(-1 / qk));
      continue;
    }
    ResonanceCheck check{k, forcing.is_zero(), forcing};
    out.checks.push_back(check);
    if (!check.pass) break;
    out.series.coefficients.push_back(ParamPoly::param(k));
  }
  return out;
}

// Report ---------------------------------------------------------------------

std::vector<int> expected_resonances(int n, int j) {
  std::vector<int> r{-1};
  for (int i = 1; i <= n - j; ++i) r.push_back(i);
  for (int i = 2; i <= j; ++i) r.push_back(-i);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<int> apply_pattern_rule(const std::vector<int>& previous, int n) {
  std::vector<int> r = previous;
  auto largest = std::max_element(r.begin(), r.end());
  if (largest == r.end() || *largest <= 0)
    throw InvalidArgument("pattern rule needs a positive resonance");
  *largest -= n + 1;
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<int> display_order(std::vector<int> resonances) {
  std::stable_sort(resonances.begin(), resonances.end(), [](int a, int b) {
    auto rank = [](int v) { return v == -1 ? 0 : v > 0 ? 1 : 2; };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return rank(a) == 2 ? a > b : a < b;
  });
  return resonances;
}

PainleveReport painleve_report(int n, std::optional<int> depth) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  PainleveReport rep;
  rep.n = n;
  const DiffPoly& eq = riccati(n);
  for (const Balance& bal : dominant_balance(eq)) {
    Branch b = make_branch(eq, bal);
    int needed = 0;
    for (int r : b.resonances) needed = std::max(needed, r);
    b.compatibility = compatibility_test(eq, b, depth.value_or(needed)).checks;
    rep.branches.push_back(std::move(b));
  }

  rep.alphas_match = static_cast<int>(rep.branches.size()) == n;
  for (int j = 1; rep.alphas_match && j <= n; ++j)
    rep.alphas_match = rep.branches[j - 1].p == -1 && rep.branches[j - 1].alpha == j;

  rep.closed_form_holds = rep.alphas_match;
  rep.pattern_rule_holds = rep.alphas_match;
  for (int j = 1; rep.alphas_match && j <= n; ++j) {
    const auto& res = rep.branches[j - 1].resonances;
    if (res != expected_resonances(n, j)) rep.closed_form_holds = false;
    if (j >= 2) {
      const auto& prev = rep.branches[j - 2].resonances;
      bool has_positive = std::any_of(prev.begin(), prev.end(), [](int r) { return r > 0; });
      if (!has_positive || apply_pattern_rule(prev, n) != res) rep.pattern_rule_holds = false;
    }
  }

  rep.painleve_pass = !rep.branches.empty();
  for (const auto& b : rep.branches) {
    bool principal = std::count(b.resonances.begin(), b.resonances.end(), -1) == 1;
    if (!principal || !b.compatible()) rep.painleve_pass = false;
  }
  return rep;
}

Json PainleveReport::to_json() const {
  Json j;
  j["n"] = n;
  Json arr = Json::array();
  for (const auto& b : branches) {
    Json jb;
    jb["alpha"] = b.alpha.get_str();
    jb["p"] = b.p;
    jb["resonances"] = b.resonances;
    jb["resonance_polynomial"] = to_text(b.resonance_poly, "r");
    Json comp = Json::array();
    for (const auto& c : b.compatibility) {
      Json jc;
      jc["resonance"] = c.resonance;
      jc["pass"] = c.pass;
      if (!c.pass) jc["forcing"] = c.forcing.to_text();
      comp.push_back(jc);
    }
    jb["compatibility"] = comp;
    arr.push_back(jb);
  }
  j["branches"] = arr;
  j["pattern_rule_holds"] = pattern_rule_holds;
  j["painleve_pass"] = painleve_pass;
  return j;
}

namespace {

std::string join(const std::vector<int>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string render_table_text(const std::vector<PainleveReport>& reports) {
  std::string out;
  for (const auto& rep : reports) {
    for (std::size_t i = 0; i < rep.branches.size(); ++i) {
      const auto& b = rep.branches[i];
      std::string member = i == 0 ? "R_" + std::to_string(rep.n) : "";
      member.resize(6, ' ');
      out += member + "alpha = " + b.alpha.get_str() + ": r = " +
             join(display_order(b.resonances), ",") + "\n";
    }
  }
  return out;
}

std::string render_table_latex(const std::vector<PainleveReport>& reports) {
  std::string out =
      "\\begin{array}{|c|l|l|}\\hline\n"
      "\\mbox{Member} & \\mbox{Leading-order coefficients} & \\mbox{Resonances} \\\\\n\\hline\n";
  for (const auto& rep : reports) {
    for (std::size_t i = 0; i < rep.branches.size(); ++i) {
      const auto& b = rep.branches[i];
      out += (i == 0 ? "R_{" + std::to_string(rep.n) + "}" : std::string()) + " & \\alpha = " +
             b.alpha.get_str() + " & r = " + join(display_order(b.resonances), ", ") +
             " \\\\\n";
    }
    out += "\\hline\n";
  }
  out += "\\end{array}\n";
  return out;
}

std::string render_general_table_text() {
  return "alpha = 1: r = -1,1,2,...,n-1\n"
         "alpha = 2: r = -1,1,...,n-2,-2\n"
         "...\n"
         "alpha = n: r = -1,-2,...,-n\n";
}

std::string render_general_table_latex() {
  return "\\begin{array}{|c|l|l|}\\hline\n"
         "\\mbox{Member} & \\mbox{Leading-order coefficients} & \\mbox{Resonances} \\\\\n\\hline\n"
         " & \\alpha = 1 & r = -1, 1, 2, \\ldots, n-1 \\\\\n"
         "R_n & \\alpha = 2 & r = -1, 1, \\ldots, n-2, -2 \\\\\n"
         " & \\quad\\vdots & \\quad\\vdots \\\\\n"
         " & \\alpha = n & r = -1, -2, \\ldots, -n \\\\\n"
         "\\hline\n\\end{array}\n";
}

}  // namespace diffseq
