#include "xrank/cli/codec.hpp"

#include <set>

namespace xrank::cli {

namespace {

const Json& field(const Json& j, const char* name, const char* what) {
  if (!j.is_object()) throw InvalidInput(std::string(what) + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw InvalidInput(std::string(what) + ": missing field '" + name + "'");
  return *it;
}

int nonnegative_int(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 1'000'000)
    throw InvalidInput(std::string(what) + ": expected a non-negative integer");
  return static_cast<int>(j.get<long long>());
}

void only_fields(const Json& j, std::initializer_list<const char*> names, const char* what) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* n : names) known = known || k == n;
    if (!known) throw InvalidInput(std::string(what) + ": unknown field '" + k + "'");
  }
}

}  // namespace

Json encode_rational(const Rational& r) { return r.to_string(); }

Rational decode_rational(const Json& j) {
  if (!j.is_string()) throw InvalidInput("rational: expected a \"num/den\" string");
  const auto s = j.get<std::string>();
  if (s.find('/') == std::string::npos) throw InvalidInput("rational: expected \"num/den\", got '" + s + "'");
  return Rational::parse(s);
}

Json encode_point(const std::vector<Rational>& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(encode_rational(x));
  return out;
}

std::vector<Rational> decode_point(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("point: expected a non-empty array");
  std::vector<Rational> out;
  bool nonzero = false;
  for (const auto& x : j) {
    out.push_back(decode_rational(x));
    nonzero = nonzero || !out.back().is_zero();
  }
  if (!nonzero) throw InvalidInput("point: all coordinates are zero");
  return out;
}

Json encode_polynomial(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) terms.push_back({{"exps", t.exps}, {"coeff", encode_rational(t.coeff)}});
  return {{"vars", p.nvars()}, {"terms", terms}};
}

MPoly decode_polynomial(const Json& j) {
  const int vars = nonnegative_int(field(j, "vars", "polynomial"), "polynomial.vars");
  only_fields(j, {"vars", "terms"}, "polynomial");
  if (vars == 0) throw InvalidInput("polynomial: vars must be positive");
  const Json& terms = field(j, "terms", "polynomial");
  if (!terms.is_array()) throw InvalidInput("polynomial.terms: expected an array");
  std::vector<Term> out;
  std::set<Exponents> seen;
  for (const auto& t : terms) {
    only_fields(t, {"exps", "coeff"}, "term");
    const Json& e = field(t, "exps", "term");
    if (!e.is_array() || static_cast<int>(e.size()) != vars)
      throw InvalidInput("term.exps: expected " + std::to_string(vars) + " exponents");
    Exponents ex;
    for (const auto& x : e) ex.push_back(nonnegative_int(x, "term.exps"));
    Rational c = decode_rational(field(t, "coeff", "term"));
    if (c.is_zero()) throw InvalidInput("term: zero coefficient");
    if (!seen.insert(ex).second) throw InvalidInput("term: repeated monomial");
    out.push_back({std::move(ex), std::move(c)});
  }
  return MPoly::from_terms(vars, std::move(out));
}

Json encode_curve(const RationalCurve& c) {
  Json comps = Json::array();
  for (const auto& p : c.component_polys()) comps.push_back(encode_polynomial(p));
  return {{"ambient", c.ambient()}, {"degree", c.degree()}, {"components", comps}};
}

RationalCurve decode_curve(const Json& j) {
  const int ambient = nonnegative_int(field(j, "ambient", "curve"), "curve.ambient");
  const int degree = nonnegative_int(field(j, "degree", "curve"), "curve.degree");
  only_fields(j, {"ambient", "degree", "components"}, "curve");
  const Json& comps = field(j, "components", "curve");
  if (!comps.is_array() || static_cast<int>(comps.size()) != ambient + 1)
    throw InvalidInput("curve.components: expected ambient + 1 polynomials");
  std::vector<MPoly> polys;
  for (const auto& p : comps) {
    MPoly m = decode_polynomial(p);
    if (m.nvars() != 2) throw InvalidInput("curve component: expected a form in 2 variables");
    if (!m.is_zero() && (!m.is_homogeneous() || m.total_degree() != degree))
      throw InvalidInput("curve component: not homogeneous of the stated degree");
    polys.push_back(std::move(m));
  }
  RationalCurve c = RationalCurve::from_mpolys(polys);
  if (c.degree() != degree) throw InvalidInput("curve: components have a common factor");
  return c;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann counts bytes from 1
    throw InvalidInput("malformed JSON at byte offset " + std::to_string(e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
}

}  // namespace xrank::cli
