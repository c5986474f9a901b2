// One line per acceptance criterion: "AC<k> PASS|FAIL <seconds>s/<budget>s <detail>".
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "diffseq/cli.hpp"
#include "diffseq/errors.hpp"
#include "diffseq/format.hpp"
#include "diffseq/integrals.hpp"
#include "diffseq/singularity.hpp"
#include "diffseq/symmetry.hpp"

using namespace diffseq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

// Terms given as (coefficient, exponents of y, y', y'', ...).
DiffPoly from_terms(std::initializer_list<std::pair<long, std::vector<int>>> terms) {
  DiffPoly p;
  for (const auto& [c, e] : terms) {
    DiffPoly m{Rational(c)};
    for (std::size_t k = 0; k < e.size(); ++k) m *= DiffPoly::y(static_cast<int>(k), e[k]);
    p += m;
  }
  return p;
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

int cli(std::vector<std::string> args, std::string* out = nullptr,
        const SuiteRegistry& suites = default_suites()) {
  args.insert(args.begin(), "diffseq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e, suites);
  if (out) *out = o.str();
  return code;
}

Outcome ac1() {
  Outcome o;
  const char* plain[] = {
      "y' + y^2",
      "y'' + 3*y*y' + y^3",
      "y''' + 4*y*y'' + 3*y'^2 + 6*y^2*y' + y^4",
      "y^(4) + 5*y*y''' + 10*y'*y'' + 10*y^2*y'' + 15*y*y'^2 + 10*y^3*y' + y^5"};
  for (int n = 1; n <= 4; ++n) {
    std::string out;
    cli({"gen", "--n", std::to_string(n)}, &out);
    o.require(out == std::string(plain[n - 1]) + " = 0\n", "gen --n " + std::to_string(n) + ": " + out);
  }
  const DiffPoly adjoint[] = {
      from_terms({{1, {0, 1}}, {-1, {2}}}),
      from_terms({{1, {0, 0, 1}}, {-3, {1, 1}}, {1, {3}}}),
      from_terms({{1, {0, 0, 0, 1}}, {-4, {1, 0, 1}}, {-3, {0, 2}}, {6, {2, 1}}, {-1, {4}}}),
      from_terms({{1, {0, 0, 0, 0, 1}}, {-5, {1, 0, 0, 1}}, {-10, {0, 1, 1}}, {10, {2, 0, 1}},
                  {15, {1, 2}}, {-10, {3, 1}}, {1, {5}}}),
      from_terms({{1, {0, 0, 0, 0, 0, 1}}, {-6, {1, 0, 0, 0, 1}}, {-15, {0, 1, 0, 1}},
                  {15, {2, 0, 0, 1}}, {60, {1, 1, 1}}, {-10, {0, 0, 2}}, {-20, {3, 0, 1}},
                  {15, {0, 3}}, {-45, {2, 2}}, {15, {4, 1}}, {-1, {6}}})};
  for (int n = 1; n <= 5; ++n)
    o.require(riccati(n, true) == adjoint[n - 1],
              "adjoint " + std::to_string(n) + ": " + to_text(riccati(n, true)));
  if (o.pass) o.detail = "R1-R4 and the five adjoint members match";
  return o;
}

Outcome ac2() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) check_gradient_recurrence(n);
  o.detail = "gradient recurrence for n <= 12";
  return o;
}

Outcome ac3() {
  Outcome o;
  for (int n = 0; n <= 10; ++n) check_interleave(n);
  o.detail = "interleave identity for n <= 10";
  return o;
}

Outcome ac4() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) verify_matrix_lemmas(n, Exec::parallel);
  o.detail = "matrix lemmas, solve and reconstruction for n <= 8";
  return o;
}

Outcome ac5() {
  Outcome o;
  const DiffPoly X = DiffPoly::x();
  for (int n = 1; n <= 10; ++n) {
    const SymmetryCheck g2 = check_symmetry(gamma2(), n);
    const SymmetryCheck g3 = check_symmetry(gamma3(n), n);
    o.require(g2.cofactor && *g2.cofactor == ExpDiffPoly(Rational(-(n + 1))),
              "Gamma2 cofactor n=" + std::to_string(n));
    o.require(g3.cofactor && *g3.cofactor == ExpDiffPoly(X * Rational(-2 * (n + 1))),
              "Gamma3 cofactor n=" + std::to_string(n));
    const PointField a = gamma1(), b = gamma2(), c = gamma3(n);
    o.require(lie_bracket(a, b) == a && lie_bracket(b, c) == c &&
                  lie_bracket(a, c) == PointField(b.xi() * Rational(2), b.eta() * Rational(2)),
              "brackets n=" + std::to_string(n));
  }
  for (const auto& f : second_member_symmetries())
    o.require(check_symmetry(f, 2).is_symmetry, f.name() + " for R2");
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> ok(static_cast<std::size_t>(n) + 1, 0);
    run_indexed(ok.size(), Exec::parallel,
                [&](std::size_t i) { ok[i] = check_symmetry(delta(static_cast<int>(i) + 1), n).is_symmetry; });
    for (std::size_t i = 0; i < ok.size(); ++i)
      o.require(ok[i], "Delta" + std::to_string(i + 1) + " n=" + std::to_string(n));
    csg_certify(n);
  }
  const DiffPoly Y = DiffPoly::y(0), Y1 = DiffPoly::y(1);
  const CsgCertificate c4 = csg_certify(4);
  o.require(c4.gradient(4) == Y * Rational(-5) && c4.gradient(3) == (Y1 + Y * Y) * Rational(-10) &&
                c4.gradient(2) == riccati(2) * Rational(-10) &&
                c4.gradient(1) == riccati(3) * Rational(-5),
            "R4 gradient block");
  if (o.pass) o.detail = "eigen-relations, brackets, eight R2 generators, Delta_i, certificates";
  return o;
}

Outcome ac6() {
  Outcome o;
  const std::string table1 =
      "R_1   alpha = 1: r = -1\n"
      "R_2   alpha = 1: r = -1,1\n"
      "      alpha = 2: r = -1,-2\n"
      "R_3   alpha = 1: r = -1,1,2\n"
      "      alpha = 2: r = -1,1,-2\n"
      "      alpha = 3: r = -1,-2,-3\n"
      "R_4   alpha = 1: r = -1,1,2,3\n"
      "      alpha = 2: r = -1,1,2,-2\n"
      "      alpha = 3: r = -1,1,-2,-3\n"
      "      alpha = 4: r = -1,-2,-3,-4\n";
  std::vector<PainleveReport> reports(8);
  run_indexed(8, Exec::parallel, [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    reports[i] = painleve_report(n);
  });
  o.require(render_table_text({reports.begin(), reports.begin() + 4}) == table1, "four-member table");
  for (const auto& r : reports) {
    o.require(r.alphas_match && r.closed_form_holds && r.pattern_rule_holds,
              "closed form or pattern rule n=" + std::to_string(r.n));
    if (r.n <= 6) {
      o.require(r.painleve_pass, "compatibility n=" + std::to_string(r.n));
      for (const auto& b : r.branches) {
        std::size_t positive = 0;
        for (int x : b.resonances) positive += x > 0;
        o.require(b.compatibility.size() == positive,
                  "every positive resonance checked n=" + std::to_string(r.n));
      }
    }
  }
  const UnivariatePoly t = UnivariatePoly::identity();
  o.require(resonance_polynomial(riccati(2), -1, Rational(1)) == (t - Rational(1)) * (t + Rational(1)),
            "Q(r) for R2, alpha = 1");
  if (o.pass) o.detail = "four-member table, general table and pattern rule n <= 8, compatibility n <= 6";
  return o;
}

Outcome ac7() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 8; ++n) {
    std::vector<Jet> jets;
    while (jets.size() < 100) {
      std::vector<Rational> a;
      for (int i = 0; i <= n; ++i) a.push_back(random_rational(rng));
      const Rational x0 = random_rational(rng);
      if (PolyX(a)(x0) != 0) jets.push_back(solution_jet(n, a, x0));
    }
    for (const auto& v : evaluate_many(riccati(n), jets, Exec::parallel))
      o.require(v == 0, "solution jet n=" + std::to_string(n));
  }
  for (int n = 0; n <= 6; ++n) {
    verify_solution_identity(n, random_poly(rng, n), 3);
    for (int j = 1; j <= n + 1; ++j) verify_invariant(invariant(n, j));
  }
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n + 1; ++i)
      for (int j = 1; j <= n + 1; ++j)
        if (i != j) verify_first_integral(first_integral(n, i, j));
  if (o.pass) o.detail = "800 solution jets, identities n <= 6, invariants n <= 6, integrals n <= 4";
  return o;
}

Outcome ac8() {
  Outcome o;
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<int> order(1, 4), deg(0, 2), pdeg(1, 6);
  for (int t = 0; t < 20; ++t) {
    CombinationSpec spec;
    const int n = order(rng);
    for (int i = 0; i <= n; ++i) spec.f.push_back(t % 2 ? random_poly(rng, deg(rng)) : random_poly(rng, 0));
    check_linearisation(spec, random_poly(rng, pdeg(rng)), 3);
  }
  o.detail = "20 random combinations, constant and quadratic coefficients";
  return o;
}

Outcome ac9() {
  Outcome o;
  std::vector<long> parts(14, 0);
  parts[0] = 1;
  for (int k = 1; k <= 13; ++k)
    for (int s = k; s <= 13; ++s) parts[s] += parts[s - k];
  for (int n = 0; n <= 12; ++n) {
    const DiffPoly& r = riccati(n);
    o.require(static_cast<long>(r.size()) == parts[n + 1], "term count n=" + std::to_string(n));
    o.require(weight_of(r) == n + 1, "weight n=" + std::to_string(n));
    for (const auto& [m, c] : r.terms()) o.require(c > 0, "positivity n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "partition counts, weights and positivity for n <= 12";
  return o;
}

Outcome ac10() {
  Outcome o;
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  std::uniform_int_distribution<int> deg(-1, 8);
  for (int t = 0; t < 1000; ++t) {
    std::vector<Rational> c;
    for (int k = 0, d = deg(rng); k <= d; ++k) c.push_back(make_rational(num(rng), den(rng)));
    const PolyX p(c);
    o.require(parse_poly_spec(to_text(p)) == p, "round trip " + to_text(p));
  }
  o.require(cli({"gen", "--n", "2"}) == 0, "exit 0");
  o.require(cli({"gen", "--n", "2", "--format", "yaml"}) == 2, "exit 2 on bad format");
  o.require(cli({"combine", "--coeffs", "1;2/0"}) == 2, "exit 2 on parse error");
  SuiteRegistry broken = default_suites();
  broken.add({"csg", 1, [](int n, std::uint64_t) -> std::vector<Report> {
                throw VerificationFailure("symmetry", "csg_certify", "n=" + std::to_string(n), "y");
              }});
  std::string out;
  o.require(cli({"verify", "--suite", "csg", "--max-n", "2"}, &out, broken) == 1, "exit 1");
  o.require(out.find("\"residual\"") != std::string::npos, "failure report");
  o.require(cli({"verify", "--suite", "all", "--max-n", "6"}) == 0, "verify --suite all --max-n 6");
  if (o.pass) o.detail = "1000 round trips, exit codes 0/1/2, full verification to n = 6";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", 1, ac1},   {"AC2", 10, ac2}, {"AC3", 10, ac3}, {"AC4", 30, ac4},
      {"AC5", 60, ac5},  {"AC6", 60, ac6}, {"AC7", 60, ac7}, {"AC8", 30, ac8},
      {"AC9", 10, ac9},  {"AC10", 180, ac10}};
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && s > c.budget) {
      o.pass = false;
      o.detail = "over budget: " + o.detail;
    }
    failures += !o.pass;
    std::printf("%-4s %s %8.3fs/%gs %s\n", c.id, o.pass ? "PASS" : "FAIL", s, c.budget, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
