#include "diffseq/json_io.hpp"

#include "diffseq/errors.hpp"

namespace diffseq {
namespace {

Json term_record(const Monomial& m, const Rational& c) {
  Json rec;
  rec["coeff"] = to_fraction_string(c);
  rec["x"] = m.x_exp();
  Json derivs = Json::object();
  for (int k = 0; k <= m.order(); ++k)
    if (m.exponent(k) > 0) derivs[std::to_string(k)] = m.exponent(k);
  rec["derivs"] = derivs;
  return rec;
}

std::pair<Monomial, Rational> parse_record(const Json& rec, std::size_t index) {
  if (!rec.is_object() || !rec.contains("coeff") || !rec.contains("x") ||
      !rec.contains("derivs"))
    throw ParseError("term record needs coeff, x and derivs", index,
                     {"coeff", "x", "derivs"});
  if (!rec["coeff"].is_string() || !rec["x"].is_number_integer() ||
      !rec["derivs"].is_object())
    throw ParseError("term record has fields of the wrong type", index);
  Rational c = parse_rational(rec["coeff"].get<std::string>());
  int xe = rec["x"].get<int>();
  if (xe < 0) throw ParseError("negative power of x", index);
  Monomial m = Monomial::x_power(xe);
  for (const auto& [key, val] : rec["derivs"].items()) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("derivative order '" + key + "' is not an integer", index);
    }
    if (k < 0 || !val.is_number_integer() || val.get<int>() <= 0)
      throw ParseError("invalid derivative entry '" + key + "'", index);
    m = m * Monomial::jet(k, val.get<int>());
  }
  return {m, c};
}

}  // namespace

Json to_json(const DiffPoly& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : p.terms()) arr.push_back(term_record(m, c));
  return arr;
}

Json to_json(const ExpDiffPoly& p) {
  Json arr = Json::array();
  for (const auto& [l, q] : p.levels())
    for (const auto& [m, c] : q.terms()) {
      Json rec = term_record(m, c);
      rec["eweight"] = l;
      arr.push_back(rec);
    }
  return arr;
}

DiffPoly diffpoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array", 0);
  DiffPoly p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto [m, c] = parse_record(j[i], i);
    p.add_term(m, c);
  }
  return p;
}

ExpDiffPoly exppoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array", 0);
  ExpDiffPoly p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto [m, c] = parse_record(j[i], i);
    int l = 0;
    if (j[i].contains("eweight")) {
      if (!j[i]["eweight"].is_number_integer())
        throw ParseError("eweight must be an integer", i);
      l = j[i]["eweight"].get<int>();
    }
    p += ExpDiffPoly(DiffPoly::term(c, m), l);
  }
  return p;
}

}  // namespace diffseq
