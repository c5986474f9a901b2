#include "diffseq/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <cstdlib>
#include <ostream>

#include "diffseq/errors.hpp"
#include "diffseq/format.hpp"
#include "diffseq/integrals.hpp"
#include "diffseq/sequence.hpp"
#include "diffseq/singularity.hpp"
#include "diffseq/symmetry.hpp"

namespace diffseq {

// Poly spec parser -------------------------------------------------------------

namespace {

class PolySpecParser {
 public:
  explicit PolySpecParser(std::string_view s) : s_(s) {}

  PolyX parse() {
    PolyX result;
    bool negative = false;
    if (at('+') || at('-')) negative = s_[pos_++] == '-';
    result += signed_term(negative);
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) return result;
      if (!at('+') && !at('-')) fail("unexpected character", {"+", "-", "end of input"});
      negative = s_[pos_++] == '-';
      result += signed_term(negative);
    }
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool at_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) {
    throw ParseError(pos_ == s_.size() ? what + " (end of input)" : what, pos_,
                     std::move(expected));
  }

  Integer digits() {
    if (!at_digit()) fail("expected digits", {"digit"});
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  int power() {
    if (!at('^')) return 1;
    ++pos_;
    const std::size_t start = pos_;
    Integer e = digits();
    if (!e.fits_sint_p() || e > 100000) {
      pos_ = start;
      fail("exponent too large", {"uint"});
    }
    return static_cast<int>(e.get_si());
  }

  PolyX monomial(const Rational& c, int k) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1, Rational(0));
    coeffs.back() = c;
    return PolyX(coeffs);
  }

  PolyX signed_term(bool negative) {
    Rational c(1);
    if (at('x')) {
      ++pos_;
      return monomial(negative ? Rational(-1) : c, power());
    }
    if (!at_digit()) fail("expected a term", {"digit", "x"});
    Integer num = digits();
    Integer den(1);
    if (at('/')) {
      ++pos_;
      const std::size_t start = (skip_ws(), pos_);
      den = digits();
      if (den == 0) {
        pos_ = start;
        fail("zero denominator", {"nonzero uint"});
      }
    }
    c = Rational(num, den);
    c.canonicalize();
    if (negative) c = -c;
    if (at('*')) {
      ++pos_;
      if (!at('x')) fail("expected x after '*'", {"x"});
    }
    if (at('x')) {
      ++pos_;
      return monomial(c, power());
    }
    return PolyX(c);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyX parse_poly_spec(std::string_view s) { return PolySpecParser(s).parse(); }

int max_n_guard() {
  if (const char* env = std::getenv("DIFFSEQ_MAX_N")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("DIFFSEQ_MAX_N is not a nonnegative integer: ") + env);
  }
  return kDefaultMaxN;
}

// Commands -------------------------------------------------------------------

namespace {

void check_n(int n, int lowest = 0) {
  if (n < lowest) throw UsageError("n must be >= " + std::to_string(lowest));
  const int guard = max_n_guard();
  if (n > guard)
    throw UsageError("n = " + std::to_string(n) + " exceeds the limit " + std::to_string(guard) +
                     " (set DIFFSEQ_MAX_N to raise it)");
}

int require_n(const CommandSpec& spec, int lowest = 0) {
  if (!spec.n) throw UsageError("--n is required");
  check_n(*spec.n, lowest);
  return *spec.n;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at - start));
    if (at == std::string::npos) return out;
    start = at + 1;
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::string render(const DiffPoly& p, Format f) {
  return f == Format::latex ? to_latex(p) : to_text(p);
}

std::string render(const ExpDiffPoly& p, Format f) {
  return f == Format::latex ? to_latex(p) : to_text(p);
}

void write_report(const Report& r, Format f, std::ostream& out) {
  if (f == Format::json) {
    out << r.to_json().dump(2) << "\n";
    return;
  }
  for (const auto& c : r.checks) out << c << "\n";
}

int cmd_gen(const CommandSpec& spec, std::ostream& out) {
  const bool adjoint = spec.subcommand == "adjoint";
  int lo, hi;
  if (spec.range) {
    std::tie(lo, hi) = *spec.range;
    if (lo > hi) throw UsageError("empty range");
    check_n(lo);
    check_n(hi);
  } else {
    lo = hi = require_n(spec);
  }
  Json arr = Json::array();
  for (int n = lo; n <= hi; ++n) {
    const DiffPoly& p = riccati(n, adjoint);
    if (spec.format == Format::json) {
      Json j;
      j["n"] = n;
      j["adjoint"] = adjoint;
      j["terms"] = to_json(p);
      arr.push_back(j);
    } else {
      out << render(p, spec.format) << " = 0\n";
    }
  }
  if (spec.format == Format::json) out << (spec.range ? arr : arr[0]).dump(2) << "\n";
  return 0;
}

int cmd_combine(const CommandSpec& spec, std::ostream& out) {
  if (spec.coeffs.empty()) throw UsageError("--coeffs is required");
  CombinationSpec comb;
  for (const auto& part : split(spec.coeffs, ';')) comb.f.push_back(parse_poly_spec(part));
  check_n(comb.n());
  const DiffPoly e = combine(comb);
  if (!spec.check_linearisation) {
    if (spec.format == Format::json) {
      Json j;
      j["n"] = comb.n();
      Json fs = Json::array();
      for (const auto& f : comb.f) fs.push_back(to_json(f));
      j["f"] = fs;
      j["terms"] = to_json(e);
      out << j.dump(2) << "\n";
    } else {
      out << render(e, spec.format) << " = 0\n";
    }
    return 0;
  }
  if (spec.p.empty()) throw UsageError("--check-linearisation needs --p");
  const PolyX p = parse_poly_spec(spec.p);
  const Report r = check_linearisation(comb, p, 5);
  if (spec.format != Format::json) out << render(e, spec.format) << " = 0\n";
  write_report(r, spec.format, out);
  return 0;
}

int cmd_painleve(const CommandSpec& spec, std::ostream& out) {
  const int n = require_n(spec, 1);
  if (spec.depth && *spec.depth < 0) throw UsageError("--depth must be >= 0");
  const PainleveReport rep = painleve_report(n, spec.depth);
  if (!rep.painleve_pass || !rep.pattern_rule_holds || !rep.closed_form_holds)
    throw VerificationFailure("singularity", "painleve_report", "R_" + std::to_string(n),
                              rep.to_json().dump());
  switch (spec.format) {
    case Format::json:
      out << rep.to_json().dump(2) << "\n";
      break;
    case Format::latex:
      out << render_table_latex({rep});
      break;
    case Format::text:
      out << render_table_text({rep}) << "pattern rule: holds\npainleve test: pass\n";
      break;
  }
  return 0;
}

int cmd_symmetries(const CommandSpec& spec, std::ostream& out) {
  const int n = require_n(spec, 1);
  std::vector<Field> fields{gamma1(), gamma2(), gamma3(n)};
  if (n == 2) {
    fields.clear();
    for (const auto& f : second_member_symmetries()) fields.push_back(f);
  }
  if (spec.nonlocal)
    for (int i = 1; i <= n + 1; ++i) fields.push_back(delta(i));

  std::vector<SymmetryCheck> checks(fields.size());
  run_indexed(fields.size(), Exec::parallel,
              [&](std::size_t i) { checks[i] = check_symmetry(fields[i], n); });

  Json arr = Json::array();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const SymmetryCheck& c = checks[i];
    std::string name;
    Json j;
    if (const auto* pf = std::get_if<PointField>(&fields[i])) {
      name = pf->name();
      j["name"] = name;
      j["kind"] = "point";
      j["xi"] = to_json(pf->xi());
      j["eta"] = to_json(pf->eta());
      if (spec.format != Format::json)
        out << name << ": xi = " << render(pf->xi(), spec.format)
            << ", eta = " << render(pf->eta(), spec.format);
    } else {
      const auto& ef = std::get<EvolutionaryField>(fields[i]);
      name = ef.name;
      j["name"] = name;
      j["kind"] = "evolutionary";
      j["q"] = to_json(ef.q);
      if (spec.format != Format::json) out << name << ": Q = " << render(ef.q, spec.format);
    }
    if (!c.is_symmetry) {
      if (spec.format != Format::json) out << "\n";
      throw VerificationFailure("symmetry", "check_symmetry", name, to_text(c.raw));
    }
    j["is_symmetry"] = true;
    if (c.cofactor) j["cofactor"] = to_json(*c.cofactor);
    if (spec.format != Format::json) {
      out << ": symmetry";
      if (c.cofactor) out << ", cofactor " << render(*c.cofactor, spec.format);
      out << "\n";
    }
    arr.push_back(j);
  }
  if (spec.format == Format::json) out << arr.dump(2) << "\n";
  return 0;
}

int cmd_invariants(const CommandSpec& spec, std::ostream& out) {
  const int n = require_n(spec);
  std::vector<int> js;
  if (spec.j && !spec.all) {
    js.push_back(*spec.j);
  } else {
    for (int j = 1; j <= n + 1; ++j) js.push_back(j);
  }
  Json arr = Json::array();
  for (int j : js) {
    const InvariantExpr inv = invariant(n, j);
    verify_invariant(inv);
    if (spec.format == Format::json) {
      Json o;
      o["n"] = n;
      o["j"] = j;
      o["body"] = to_json(inv.body);
      arr.push_back(o);
    } else {
      out << "I_" << j << " = " << render(inv.body, spec.format) << "\n";
    }
  }
  if (spec.format == Format::json) out << (js.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return 0;
}

int cmd_solve(const CommandSpec& spec, std::ostream& out) {
  const int n = require_n(spec);
  if (spec.a.empty()) throw UsageError("--a is required");
  if (spec.x0.empty()) throw UsageError("--x0 is required");
  std::vector<Rational> a;
  for (const auto& part : split(spec.a, ',')) a.push_back(parse_rational(trim(part)));
  const Rational x0 = parse_rational(trim(spec.x0));
  if (static_cast<int>(a.size()) != n + 1)
    throw UsageError("--a needs " + std::to_string(n + 1) + " coefficients");
  const Jet jet = solution_jet(n, a, x0);
  const Rational residual = evaluate_jet(riccati(n), jet);
  if (residual != 0)
    throw VerificationFailure("integrals", "solution_jet", "R_" + std::to_string(n),
                              residual.get_str());
  if (spec.format == Format::json) {
    Json j;
    j["n"] = n;
    j["P"] = to_json(PolyX(a));
    j["x0"] = to_fraction_string(x0);
    Json vals = Json::array();
    for (const auto& v : jet.values) vals.push_back(to_fraction_string(v));
    j["jet"] = vals;
    j["residual"] = to_fraction_string(residual);
    out << j.dump(2) << "\n";
    return 0;
  }
  for (int k = 0; k <= n; ++k)
    out << to_text(DiffPoly::y(k)) << " = " << jet.values[k].get_str() << "\n";
  out << "R_" << n << " = " << residual.get_str() << "\n";
  return 0;
}

int cmd_verify(const CommandSpec& spec, std::ostream& out, const SuiteRegistry& suites) {
  if (spec.suite.empty()) throw UsageError("--suite is required");
  check_n(spec.max_n, 1);
  if (spec.suite != "all" && !suites.find(spec.suite))
    throw UsageError("unknown suite '" + spec.suite + "'");
  const Json result = run_verify(suites, spec.suite, spec.max_n, spec.seed);
  if (spec.format == Format::json) {
    out << result.dump(2) << "\n";
    return 0;
  }
  for (const auto& s : result["suites"])
    out << s["name"].get<std::string>() << ": " << s["checks"].get<std::size_t>()
        << " checks passed\n";
  return 0;
}

Json failure_json(const VerificationFailure& f) {
  Json j;
  j["passed"] = false;
  j["module"] = f.module;
  j["operation"] = f.operation;
  j["stage"] = f.stage;
  j["residual"] = f.residual;
  return j;
}

}  // namespace

int run_command(const CommandSpec& spec, std::ostream& out, std::ostream& err,
                const SuiteRegistry& suites) {
  try {
    const std::string& s = spec.subcommand;
    if (s == "gen" || s == "adjoint") return cmd_gen(spec, out);
    if (s == "combine") return cmd_combine(spec, out);
    if (s == "painleve") return cmd_painleve(spec, out);
    if (s == "symmetries") return cmd_symmetries(spec, out);
    if (s == "invariants") return cmd_invariants(spec, out);
    if (s == "solve") return cmd_solve(spec, out);
    if (s == "verify") return cmd_verify(spec, out, suites);
    throw UsageError("unknown subcommand '" + s + "'");
  } catch (const VerificationFailure& f) {
    out << failure_json(f).dump(2) << "\n";
    err << "verification failed: " << f.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const SuiteRegistry& suites) {
  CLI::App app{"Riccati sequence engine"};
  app.require_subcommand(1);
  CommandSpec spec;
  std::string range, format = "text";
  std::optional<int> j;
  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"latex", Format::latex}, {"json", Format::json}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, latex or json")
        ->check(CLI::IsMember({"text", "latex", "json"}));
  };

  for (const char* name : {"gen", "adjoint"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "gen"
                                             ? "Members of the sequence"
                                             : "Members of the adjoint sequence");
    auto* n_opt = sub->add_option("--n", spec.n, "member index");
    auto* r_opt = sub->add_option("--range", range, "A..B");
    n_opt->excludes(r_opt);
    add_format(sub);
  }
  {
    auto* sub = app.add_subcommand("combine", "Linear combination sum f_i(x) R_i");
    sub->add_option("--coeffs", spec.coeffs, "f0;f1;...")->required();
    auto* chk = sub->add_flag("--check-linearisation", spec.check_linearisation);
    sub->add_option("--p", spec.p, "polynomial P")->needs(chk);
    add_format(sub);
  }
  {
    auto* sub = app.add_subcommand("painleve", "Singularity analysis");
    sub->add_option("--n", spec.n)->required();
    sub->add_option("--depth", spec.depth);
    add_format(sub);
  }
  {
    auto* sub = app.add_subcommand("symmetries", "Symmetry checks");
    sub->add_option("--n", spec.n)->required();
    sub->add_flag("--nonlocal", spec.nonlocal);
    add_format(sub);
  }
  {
    auto* sub = app.add_subcommand("invariants", "Invariants I_j");
    sub->add_option("--n", spec.n)->required();
    auto* j_opt = sub->add_option("--j", j);
    auto* all = sub->add_flag("--all", spec.all);
    j_opt->excludes(all);
    add_format(sub);
  }
  {
    auto* sub = app.add_subcommand("solve", "Jet of the general solution");
    sub->add_option("--n", spec.n)->required();
    sub->add_option("--a", spec.a, "A0,...,An")->required();
    sub->add_option("--x0", spec.x0)->required();
    add_format(sub);
  }
  {
    auto* sub = app.add_subcommand("verify", "Identity suites");
    sub->add_option("--suite", spec.suite)
        ->required()
        ->check(CLI::IsMember({"lemma1", "interleave", "matrix", "symmetry", "csg", "painleve",
                               "integrals", "all"}));
    sub->add_option("--max-n", spec.max_n)->required();
    sub->add_option("--seed", spec.seed);
    add_format(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  spec.subcommand = app.get_subcommands().front()->get_name();
  spec.format = formats.at(format);
  spec.j = j;
  if (!range.empty()) {
    const auto dots = range.find("..");
    try {
      if (dots == std::string::npos) throw std::invalid_argument("range");
      std::size_t u1 = 0, u2 = 0;
      const std::string a = range.substr(0, dots), b = range.substr(dots + 2);
      const int lo = std::stoi(a, &u1), hi = std::stoi(b, &u2);
      if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument("range");
      spec.range = {lo, hi};
    } catch (const std::exception&) {
      err << "error: --range expects A..B\n";
      return 2;
    }
  }
  if ((spec.subcommand == "gen" || spec.subcommand == "adjoint") && !spec.n && !spec.range) {
    err << "error: --n or --range is required\n";
    return 2;
  }
  return run_command(spec, out, err, suites);
}

}  // namespace diffseq
