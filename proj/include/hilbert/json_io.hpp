#pragma once

// JSON schemas for every payload and report.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbert/admissibility.hpp"
#include "hilbert/bounds.hpp"
#include "hilbert/gotzmann.hpp"
#include "hilbert/integer.hpp"
#include "hilbert/polynomial.hpp"
#include "hilbert/segment_ideal.hpp"

namespace hilbert {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating payload.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace json_detail {

inline const Json& field(const Json& obj, const char* key, const std::string& where)
{
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

} // namespace json_detail

/// Accepts JSON integers and decimal strings.
inline BigInt parse_bigint(const Json& j, const std::string& where)
{
  try {
    if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected an integer or integer string");
}

inline Rational parse_rational_json(const Json& j, const std::string& where)
{
  try {
    if (j.is_number_integer()) return Rational(parse_bigint(j, where));
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected an integer or a \"p/q\" string");
}

inline std::uint64_t parse_count(const Json& j, const std::string& where)
{
  const BigInt v = parse_bigint(j, where);
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint32_t>::max()))
    throw InputError(where + ": " + v.str() + " out of range");
  return static_cast<std::uint64_t>(v);
}

/// BigInts that fit in 64 bits become numbers, larger ones strings.
inline Json bigint_json(const BigInt& v)
{
  if (v >= BigInt(std::numeric_limits<std::int64_t>::min()) && v <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline Json bigints_json(const std::vector<BigInt>& vs)
{
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(bigint_json(v));
  return out;
}

/// {"coeffs": [...ascending...]} or {"e": [e_0, ..., e_{d-1}]}.
inline RationalPolynomial parse_polynomial(const Json& j, const std::string& where = "polynomial")
{
  if (!j.is_object()) throw InputError(where + ": expected an object");
  const bool has_coeffs = j.contains("coeffs"), has_e = j.contains("e");
  if (has_coeffs == has_e) throw InputError(where + ": give exactly one of \"coeffs\" or \"e\"");
  const Json& arr = has_coeffs ? j["coeffs"] : j["e"];
  if (!arr.is_array()) throw InputError(where + ": coefficient list must be an array");
  if (has_coeffs) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < arr.size(); ++i)
      c.push_back(parse_rational_json(arr[i], where + ".coeffs[" + std::to_string(i) + "]"));
    return RationalPolynomial(std::move(c));
  }
  IntValuedPolynomial ev;
  for (std::size_t i = 0; i < arr.size(); ++i) ev.e.push_back(parse_bigint(arr[i], where + ".e[" + std::to_string(i) + "]"));
  return to_polynomial(ev);
}

inline Json polynomial_json(const RationalPolynomial& p)
{
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_string(x));
  return Json{{"coeffs", c}, {"text", p.str()}};
}

/// {"r": 5, "prefix": [9, 11], "tail": POLY}.
inline HilbertFunctionSpec parse_spec(const Json& j, const std::string& where = "spec")
{
  HilbertFunctionSpec s;
  s.r = parse_bigint(json_detail::field(j, "r", where), where + ".r");
  if (s.r < 1) throw InputError(where + ".r: must be positive");
  if (j.contains("prefix")) {
    const Json& pre = j["prefix"];
    if (!pre.is_array()) throw InputError(where + ".prefix: expected an array");
    for (std::size_t i = 0; i < pre.size(); ++i) {
      s.prefix.push_back(parse_bigint(pre[i], where + ".prefix[" + std::to_string(i) + "]"));
      if (s.prefix.back() < 0) throw InputError(where + ".prefix[" + std::to_string(i) + "]: must be nonnegative");
    }
  }
  s.tail = parse_polynomial(json_detail::field(j, "tail", where), where + ".tail");
  return s;
}

inline Json spec_json(const HilbertFunctionSpec& s)
{
  return Json{{"r", bigint_json(s.r)}, {"prefix", bigints_json(s.prefix)}, {"tail", polynomial_json(s.tail)}};
}

/// {"s": s_1, "s_counts": [...], "c": [...]}; "c" is listed for s <= 1000,
/// or s <= 10^4 with expand_c.
inline Json development_json(const GotzmannDevelopment& dev, bool expand_c)
{
  Json out{{"s", bigint_json(dev.length())}, {"s_counts", bigints_json(dev.counts())}};
  const BigInt limit = expand_c ? 10000 : 1000;
  if (dev.length() <= limit) {
    Json c = Json::array();
    for (auto x : dev.coefficients()) c.push_back(x);
    out["c"] = c;
  } else {
    out["c_omitted"] = "development longer than " + limit.str() + " terms";
  }
  return out;
}

inline Json e_json(const IntValuedPolynomial& ev) { return bigints_json(ev.e); }

/// {"b": 4, "r": 1, "generators": [{"deg": 3, "layer": 0, "exp": [0, 0, 0, 3]}],
///  "labels": [...optional...]}. "layer" is r minus the series index.
inline SegmentIdeal parse_ideal(const Json& j, const std::string& where = "ideal")
{
  SegmentIdeal I;
  I.b = parse_count(json_detail::field(j, "b", where), where + ".b");
  I.r = parse_count(json_detail::field(j, "r", where), where + ".r");
  if (I.b == 0 || I.r == 0) throw InputError(where + ": b and r must be positive");
  const Json& gens = json_detail::field(j, "generators", where);
  if (!gens.is_array()) throw InputError(where + ".generators: expected an array");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string w = where + ".generators[" + std::to_string(k) + "]";
    const Json& exp = json_detail::field(gens[k], "exp", w);
    if (!exp.is_array() || exp.size() != I.b) throw InputError(w + ".exp: expected " + std::to_string(I.b) + " exponents");
    Generator g;
    for (std::size_t v = 0; v < exp.size(); ++v)
      g.exps.push_back(static_cast<std::uint32_t>(parse_count(exp[v], w + ".exp[" + std::to_string(v) + "]")));
    g.degree = monomial_degree(g.exps);
    if (gens[k].contains("deg") && parse_count(gens[k]["deg"], w + ".deg") != g.degree)
      throw InputError(w + ".deg: does not match the exponents");
    const std::uint64_t layer = gens[k].contains("layer") ? parse_count(gens[k]["layer"], w + ".layer") : 0;
    if (layer >= I.r) throw InputError(w + ".layer: must be below r = " + std::to_string(I.r));
    g.j_index = I.r - layer;
    I.generators.push_back(std::move(g));
  }
  return I;
}

inline std::vector<std::string> parse_labels(const Json& j, std::uint64_t r, const std::string& where)
{
  std::vector<std::string> labels;
  if (!j.contains("labels")) return labels;
  const Json& arr = j["labels"];
  if (!arr.is_array() || arr.size() != r + 1)
    throw InputError(where + ".labels: expected " + std::to_string(r + 1) + " strings");
  for (const auto& l : arr) {
    if (!l.is_string()) throw InputError(where + ".labels: expected strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

inline Json ideal_json(const SegmentIdeal& I, const std::vector<std::string>& labels = {})
{
  Json gens = Json::array();
  for (const auto& g : I.generators) {
    Json exp = Json::array();
    for (auto e : g.exps) exp.push_back(e);
    gens.push_back(Json{{"deg", g.degree}, {"layer", I.layer(g)}, {"exp", exp}, {"text", format_generator(I, g, labels)}});
  }
  Json out{{"b", I.b}, {"r", I.r}, {"generators", gens}};
  if (!labels.empty()) out["labels"] = labels;
  out["text"] = format_ideal(I, labels);
  return out;
}

inline std::string integrality_name(IntegralityKind k)
{
  switch (k) {
  case IntegralityKind::accepted: return "accepted";
  case IntegralityKind::zero: return "zero";
  case IntegralityKind::nonpositive_leading: return "nonpositive_leading";
  case IntegralityKind::leading_not_multiple: return "leading_not_multiple";
  case IntegralityKind::nonintegral_value: return "nonintegral_value";
  }
  return "unknown";
}

inline Json gotztst_json(const RationalPolynomial& p, const GotzTstReport& rep, bool expand_c)
{
  Json out{{"polynomial", polynomial_json(p)},
           {"admissible", rep.admissible()},
           {"integrality", integrality_name(rep.integrality.kind)}};
  if (rep.e) out["e"] = e_json(*rep.e);
  if (rep.dev) out["development"] = development_json(*rep.dev, expand_c);
  if (!rep.admissible()) {
    out["rejected_at_step"] = rep.rejected_at_step;
    out["reason"] = rep.reason;
  }
  return out;
}

inline Json badm_json(const BadmReport& rep, bool expand_c)
{
  Json out{{"admissible", rep.admissible}};
  out["b_min"] = rep.b_min ? Json(*rep.b_min) : Json(nullptr);
  if (!rep.admissible) out["reason"] = rep.reason;
  out["normalized"] = spec_json(rep.normalized);
  if (rep.e) out["e"] = e_json(*rep.e);
  if (rep.gamma) {
    out["gamma"] = bigint_json(rep.gamma->gamma);
    out["Gamma"] = polynomial_json(rep.gamma->remainder);
  }
  if (rep.gamma_dev) out["gamma_development"] = development_json(*rep.gamma_dev, expand_c);
  if (rep.tail_dev) out["development"] = development_json(*rep.tail_dev, expand_c);
  if (rep.p_gamma) out["p_gamma"] = bigint_json(*rep.p_gamma);
  if (rep.p_tail) out["p_h"] = bigint_json(*rep.p_tail);
  out["p"] = bigint_json(rep.p);
  if (rep.regularity_index) out["regularity_index"] = *rep.regularity_index;
  if (rep.m) out["m"] = *rep.m;
  Json trace = Json::array();
  for (const auto& t : rep.trace) trace.push_back(Json{{"step", t.step}, {"detail", t.detail}});
  out["trace"] = trace;
  return out;
}

inline Json vanishing_json(const std::vector<VanishingRow>& rows)
{
  Json out = Json::array();
  for (const auto& v : rows)
    out.push_back(Json{{"i", v.i}, {"n_ge", bigint_json(v.n_ge)}, {"a_le", bigint_json(v.a_le)}, {"vacuous", v.vacuous}});
  return out;
}

/// a0 given as an integer, "-inf" or "unknown"; absent means unknown.
inline A0 parse_a0(const Json& j, const std::string& where)
{
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "-inf") return MinusInfinity{};
    if (s == "unknown") return Unknown{};
  }
  return parse_bigint(j, where);
}

} // namespace hilbert
