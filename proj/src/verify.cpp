#include "diffseq/verify.hpp"

#include <random>

#include "diffseq/errors.hpp"
#include "diffseq/format.hpp"
#include "diffseq/integrals.hpp"
#include "diffseq/singularity.hpp"
#include "diffseq/symmetry.hpp"

namespace diffseq {

void SuiteRegistry::add(Suite suite) {
  for (auto& s : suites_)
    if (s.name == suite.name) {
      s = std::move(suite);
      return;
    }
  suites_.push_back(std::move(suite));
}

const Suite* SuiteRegistry::find(const std::string& name) const {
  for (const auto& s : suites_)
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<std::string> SuiteRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& s : suites_) out.push_back(s.name);
  return out;
}

namespace {

std::mt19937_64 rng_for(std::uint64_t seed, int n) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n)};
  return std::mt19937_64(seq);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return make_rational(num(rng), den(rng));
}

PolyX random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng));
  while (c.back() == 0) c.back() = random_rational(rng);
  return PolyX(c);
}

void expect(bool ok, const std::string& module, const std::string& op, const std::string& stage,
            const std::string& residual) {
  if (!ok) throw VerificationFailure(module, op, stage, residual);
}

std::vector<Report> symmetry_suite(int n) {
  const std::string mod = "symmetry";
  Report rep{mod, "check_symmetry", n, {}};
  auto expect_cofactor = [&](const PointField& f, const ExpDiffPoly& want) {
    const SymmetryCheck c = check_symmetry(f, n);
    expect(c.is_symmetry && c.cofactor && *c.cofactor == want, mod, "check_symmetry", f.name(),
           c.cofactor ? to_text(*c.cofactor - want) : to_text(c.raw));
    rep.add(f.name() + " cofactor " + to_text(want));
  };
  expect_cofactor(gamma1(), ExpDiffPoly());
  expect_cofactor(gamma2(), ExpDiffPoly(Rational(-(n + 1))));
  expect_cofactor(gamma3(n), ExpDiffPoly(DiffPoly::x() * Rational(-2 * (n + 1))));

  Report alg{mod, "lie_bracket", n, {}};
  auto expect_bracket = [&](const PointField& a, const PointField& b, const PointField& want,
                            const std::string& label) {
    const PointField got = lie_bracket(a, b);
    expect(got == want, mod, "lie_bracket", label,
           to_text(got.xi() - want.xi()) + "; " + to_text(got.eta() - want.eta()));
    alg.add(label);
  };
  const PointField g1 = gamma1(), g2 = gamma2(), g3 = gamma3(n);
  expect_bracket(g1, g2, g1, "[G1,G2] = G1");
  expect_bracket(g1, g3, PointField(g2.xi() * Rational(2), g2.eta() * Rational(2)), "[G1,G3] = 2G2");
  expect_bracket(g2, g3, g3, "[G2,G3] = G3");

  Report nonlocal{mod, "delta", n, {}};
  for (int i = 1; i <= n + 1; ++i) {
    const EvolutionaryField d = delta(i);
    const SymmetryCheck c = check_symmetry(d, n);
    expect(c.is_symmetry, mod, "delta", d.name, to_text(c.raw));
    nonlocal.add(d.name + " symmetry");
  }
  std::vector<Report> out{rep, alg, nonlocal};

  if (n == 2) {
    Report eight{mod, "second_member_symmetries", n, {}};
    for (const auto& f : second_member_symmetries()) {
      const SymmetryCheck c = check_symmetry(f, n);
      expect(c.is_symmetry, mod, "second_member_symmetries", f.name(), to_text(c.raw));
      eight.add(f.name() + " symmetry");
    }
    out.push_back(eight);
  }
  return out;
}

std::vector<Report> painleve_suite(int n) {
  const std::string mod = "singularity";
  const PainleveReport pr = painleve_report(n);
  Report rep{mod, "painleve_report", n, {}};
  expect(pr.alphas_match, mod, "dominant_balance", "alpha = 1..n", pr.to_json().dump());
  rep.add("alpha = 1.." + std::to_string(n));
  for (const auto& b : pr.branches) {
    UnivariatePoly product(b.resonance_poly.leading());
    for (int r : b.resonances) product = product * UnivariatePoly::linear(Rational(-r));
    expect(product == b.resonance_poly, mod, "branch_resonances",
           "alpha=" + b.alpha.get_str(), to_text(product - b.resonance_poly, "r"));
  }
  rep.add("resonances factor Q(r)");
  expect(pr.closed_form_holds, mod, "painleve_report", "closed form", pr.to_json().dump());
  rep.add("general table");
  expect(pr.pattern_rule_holds, mod, "painleve_report", "pattern rule", pr.to_json().dump());
  rep.add("pattern rule");
  for (const auto& b : pr.branches)
    for (const auto& c : b.compatibility)
      expect(c.pass, mod, "compatibility_test",
             "alpha=" + b.alpha.get_str() + " r=" + std::to_string(c.resonance),
             c.forcing.to_text());
  expect(pr.painleve_pass, mod, "painleve_report", "verdict", pr.to_json().dump());
  rep.add("compatibility at every positive resonance");
  return {rep};
}

std::vector<Report> integrals_suite(int n, std::uint64_t seed) {
  const std::string mod = "integrals";
  auto rng = rng_for(seed, n);
  std::vector<Report> out;

  Report sol{mod, "solution_jet", n, {}};
  std::vector<Jet> jets;
  while (jets.size() < 100) {
    std::vector<Rational> a;
    for (int i = 0; i <= n; ++i) a.push_back(random_rational(rng));
    const Rational x0 = random_rational(rng);
    if (PolyX(a)(x0) == 0) continue;
    jets.push_back(solution_jet(n, a, x0));
  }
  const auto values = evaluate_many(riccati(n), jets);
  for (std::size_t s = 0; s < values.size(); ++s)
    expect(values[s] == 0, mod, "solution_jet", "sample " + std::to_string(s),
           values[s].get_str());
  sol.add("R_n vanishes on 100 random solution jets");
  out.push_back(sol);

  out.push_back(verify_solution_identity(n, random_poly(rng, n), 5));
  for (int j = 1; j <= n + 1; ++j) out.push_back(verify_invariant(invariant(n, j)));
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j)
      if (i != j) out.push_back(verify_first_integral(first_integral(n, i, j)));

  CombinationSpec spec;
  for (int i = 0; i <= n; ++i) {
    std::uniform_int_distribution<int> deg(0, 2);
    spec.f.push_back(random_poly(rng, deg(rng)));
  }
  out.push_back(check_linearisation(spec, random_poly(rng, n + 1), 3));
  return out;
}

SuiteRegistry make_default() {
  SuiteRegistry r;
  r.add({"lemma1", 1, [](int n, std::uint64_t) { return std::vector{check_gradient_recurrence(n)}; }});
  r.add({"interleave", 0, [](int n, std::uint64_t) { return std::vector{check_interleave(n)}; }});
  r.add({"matrix", 1, [](int n, std::uint64_t) { return std::vector{verify_matrix_lemmas(n)}; }});
  r.add({"symmetry", 1, [](int n, std::uint64_t) { return symmetry_suite(n); }});
  r.add({"csg", 1, [](int n, std::uint64_t) { return std::vector{csg_certify(n).report}; }});
  r.add({"painleve", 1, [](int n, std::uint64_t) { return painleve_suite(n); }});
  r.add({"integrals", 1, integrals_suite});
  return r;
}

}  // namespace

const SuiteRegistry& default_suites() {
  static const SuiteRegistry registry = make_default();
  return registry;
}

Json run_verify(const SuiteRegistry& registry, const std::string& suite, int max_n,
                std::uint64_t seed, Exec exec) {
  std::vector<const Suite*> selected;
  if (suite == "all") {
    for (const auto& name : registry.names()) selected.push_back(registry.find(name));
  } else if (const Suite* s = registry.find(suite)) {
    selected.push_back(s);
  } else {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }

  struct Task {
    const Suite* suite;
    int n;
  };
  std::vector<Task> tasks;
  for (const Suite* s : selected)
    for (int n = s->min_n; n <= max_n; ++n) tasks.push_back({s, n});

  // Largest n first so the long tasks start early.
  std::vector<std::size_t> order(tasks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return tasks[a].n > tasks[b].n; });

  std::vector<std::vector<Report>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  run_indexed(order.size(), exec, [&](std::size_t k) {
    const std::size_t t = order[k];
    try {
      results[t] = tasks[t].suite->body(tasks[t].n, seed);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  });
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Json out;
  out["max_n"] = max_n;
  out["seed"] = seed;
  Json suites = Json::array();
  std::size_t t = 0;
  for (const Suite* s : selected) {
    Json js;
    js["name"] = s->name;
    Json reports = Json::array();
    std::size_t checks = 0;
    for (; t < tasks.size() && tasks[t].suite == s; ++t)
      for (const auto& r : results[t]) {
        reports.push_back(r.to_json());
        checks += r.checks.size();
      }
    js["checks"] = checks;
    js["reports"] = reports;
    suites.push_back(js);
  }
  out["suites"] = suites;
  out["passed"] = true;
  return out;
}

}  // namespace diffseq
