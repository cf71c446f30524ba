#pragma once

// JSON forms of harmonic functions, polynomials and design reports.

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hwe/designs.hpp"
#include "hwe/harmonic.hpp"
#include "hwe/poly.hpp"

namespace hwe {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json set_to_json(Mask m) {
  Json a = Json::array();
  for (Mask rest = m; rest != 0; rest &= rest - 1) a.push_back(std::countr_zero(rest) + 1);
  return a;
}

inline Mask set_from_json(const Json& a, std::size_t n) {
  if (!a.is_array()) throw Error(ErrorKind::ParseError, "\"set\" must be an array");
  Mask m = 0;
  for (const auto& v : a) {
    if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, "set elements must be integers");
    const long e = v.get<long>();
    if (e < 1 || static_cast<std::size_t>(e) > n)
      throw Error(ErrorKind::ParseError, "set element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    const Mask bit = Mask{1} << (e - 1);
    if (m & bit) throw Error(ErrorKind::ParseError, "repeated element in set");
    m |= bit;
  }
  return m;
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline long integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be an integer");
  return v.get<long>();
}

inline Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(v.get<long>()));
  throw Error(ErrorKind::ParseError, "rational values are strings \"p/q\"");
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace detail

// Harmonic functions ---------------------------------------------------------

inline Json to_json(const SubsetFunction& f) {
  std::vector<std::pair<Mask, Rational>> items(f.values.begin(), f.values.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  Json coeffs = Json::array();
  for (const auto& [z, v] : items) {
    if (v == 0) continue;
    Json e;
    e["set"] = detail::set_to_json(z);
    e["value"] = format_rational(v);
    coeffs.push_back(std::move(e));
  }
  Json j;
  j["n"] = f.n;
  j["d"] = f.d;
  j["coeffs"] = std::move(coeffs);
  return j;
}

inline Json to_json(const HarmonicFunction& f) { return to_json(f.base()); }

/// Reads any d-subset function; duplicate or wrong-size sets are rejected.
inline SubsetFunction subset_function_from_json(const Json& j) {
  const long n = detail::integer_field(j, "n"), d = detail::integer_field(j, "d");
  if (n < 0 || static_cast<std::size_t>(n) > kMaxLength)
    throw Error(ErrorKind::GroundSetTooLarge, "n must lie in 0.." + std::to_string(kMaxLength));
  if (d < 0 || d > n) throw Error(ErrorKind::DegreeOutOfRange, "d must lie in 0..n");
  const Json& coeffs = detail::field(j, "coeffs");
  if (!coeffs.is_array()) throw Error(ErrorKind::ParseError, "\"coeffs\" must be an array");
  SubsetFunction f{static_cast<std::size_t>(n), static_cast<std::size_t>(d), {}};
  std::set<Mask> seen;
  for (const auto& e : coeffs) {
    const Mask z = detail::set_from_json(detail::field(e, "set"), f.n);
    if (static_cast<std::size_t>(std::popcount(z)) != f.d)
      throw Error(ErrorKind::ParseError, "set of size " + std::to_string(std::popcount(z)) + " in a degree " +
                                             std::to_string(d) + " function");
    if (!seen.insert(z).second) throw Error(ErrorKind::ParseError, "duplicate set");
    const Rational v = detail::rational_from_json(detail::field(e, "value"));
    if (v != 0) f.values.emplace(z, v);
  }
  return f;
}

inline HarmonicFunction harmonic_from_json(const Json& j) {
  return HarmonicFunction::from(subset_function_from_json(j));
}

inline HarmonicFunction parse_harmonic(const std::string& text) { return harmonic_from_json(detail::parse_text(text)); }
inline HarmonicFunction read_harmonic_file(const std::string& path) { return parse_harmonic(detail::slurp(path)); }

// Polynomials ----------------------------------------------------------------

inline Json to_json(const HomogeneousPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(format_rational(c));
  Json j;
  j["degree"] = p.degree();
  j["coeffs"] = std::move(coeffs);
  return j;
}

inline HomogeneousPoly poly_from_json(const Json& j) {
  const long degree = detail::integer_field(j, "degree");
  const Json& coeffs = detail::field(j, "coeffs");
  if (!coeffs.is_array()) throw Error(ErrorKind::ParseError, "\"coeffs\" must be an array");
  std::vector<Rational> cs;
  for (const auto& v : coeffs) cs.push_back(detail::rational_from_json(v));
  return HomogeneousPoly(degree, std::move(cs));
}

// Design reports -------------------------------------------------------------

inline Json to_json(const DesignReport& r) {
  Json j;
  j["t"] = r.t;
  j["is_design"] = r.is_design;
  j["lambda"] = r.lambda ? Json(r.lambda->get_str()) : Json(nullptr);
  Json v = Json::array();
  for (const auto& [s, count] : r.violations) v.push_back({{"set", detail::set_to_json(s)}, {"count", count.get_str()}});
  j["violations"] = std::move(v);
  return j;
}

inline DesignReport design_report_from_json(const Json& j, std::size_t n) {
  DesignReport r;
  r.t = static_cast<std::size_t>(detail::integer_field(j, "t"));
  const Json& flag = detail::field(j, "is_design");
  if (!flag.is_boolean()) throw Error(ErrorKind::ParseError, "\"is_design\" must be boolean");
  r.is_design = flag.get<bool>();
  const Json& lam = detail::field(j, "lambda");
  if (!lam.is_null()) r.lambda = detail::rational_from_json(lam).get_num();
  if (r.lambda.has_value() != r.is_design) throw Error(ErrorKind::ParseError, "lambda must be present iff is_design");
  for (const auto& v : detail::field(j, "violations"))
    r.violations.emplace_back(detail::set_from_json(detail::field(v, "set"), n),
                              detail::rational_from_json(detail::field(v, "count")).get_num());
  return r;
}

inline Json to_json(const AMConclusion& c) {
  Json j;
  j["side"] = c.side;
  j["r"] = c.r;
  j["i"] = c.i;
  j["report"] = to_json(c.report);
  return j;
}

inline Json to_json(const AMReport& r) {
  Json j;
  j["r"] = r.r;
  j["t"] = r.t;
  j["d"] = r.d;
  j["d_dual"] = r.d_dual;
  j["L_sets"] = r.L_sets;
  j["margins"] = r.margins;
  j["hypothesis_holds"] = r.hypothesis_holds;
  auto list = [](const std::vector<AMConclusion>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) a.push_back(to_json(c));
    return a;
  };
  j["conclusions"] = list(r.conclusions);
  j["counterexamples"] = list(r.counterexamples);
  j["observed"] = list(r.observed);
  j["verified"] = r.verified();
  return j;
}

inline AMReport am_report_from_json(const Json& j, std::size_t n) {
  AMReport r;
  try {
    r.r = j.at("r").get<long>();
    r.t = j.at("t").get<long>();
    r.d = j.at("d").get<std::vector<std::size_t>>();
    r.d_dual = j.at("d_dual").get<std::vector<std::size_t>>();
    r.L_sets = j.at("L_sets").get<std::vector<std::vector<std::size_t>>>();
    r.margins = j.at("margins").get<std::vector<long>>();
    r.hypothesis_holds = j.at("hypothesis_holds").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  auto conclusion = [n](const Json& c) {
    AMConclusion out;
    out.side = detail::field(c, "side").get<std::string>();
    out.r = detail::integer_field(c, "r");
    out.i = static_cast<std::size_t>(detail::integer_field(c, "i"));
    out.report = design_report_from_json(detail::field(c, "report"), n);
    return out;
  };
  for (const auto& c : detail::field(j, "conclusions")) r.conclusions.push_back(conclusion(c));
  for (const auto& c : detail::field(j, "counterexamples")) r.counterexamples.push_back(conclusion(c));
  for (const auto& c : detail::field(j, "observed")) r.observed.push_back(conclusion(c));
  return r;
}

}  // namespace hwe
