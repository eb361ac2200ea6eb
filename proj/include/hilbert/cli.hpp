#pragma once

// Subcommand dispatch for the command-line tool. Argument parsing lives in
// the executable; everything here works on streams so it can be tested.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert/admissibility.hpp"
#include "hilbert/bounds.hpp"
#include "hilbert/gotzmann.hpp"
#include "hilbert/json_io.hpp"
#include "hilbert/segment_ideal.hpp"

namespace hilbert::cli {

enum ExitCode : int { ok = 0, input_error = 1, internal_error = 2 };

/// A computed result contradicted an independent check.
class InvariantBreach : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class OutputMode { json, pretty };

struct Options {
  std::string subcommand;
  std::string input = "-";
  OutputMode output = OutputMode::json;
  std::optional<std::uint64_t> horizon;
  bool expand_c = false;
};

inline const std::vector<std::string>& subcommands()
{
  static const std::vector<std::string> names{"gotztst", "badm", "efec", "saturate", "verify", "bounds", "mumford"};
  return names;
}

namespace detail {

// Staircase verification is skipped past this many monomials in one degree.
constexpr std::uint64_t verify_limit = 2'000'000;

inline std::uint64_t opt_count(const Json& payload, const char* key, const std::string& where)
{
  return parse_count(json_detail::field(payload, key, where), where + "." + key);
}

inline Json oracle_rows(const SegmentIdeal& ideal, const HilbertFunctionSpec& spec, std::uint64_t horizon, bool& pass)
{
  const auto got = staircase_hilbert(ideal, horizon);
  Json rows = Json::array();
  pass = true;
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    const Rational want = spec.exact_value(n);
    const bool same = Rational(got[n]) == want;
    pass = pass && same;
    rows.push_back(Json{{"n", n}, {"expected", to_string(want)}, {"oracle", bigint_json(got[n])}, {"pass", same}});
  }
  return rows;
}

inline Json run_gotztst(const Json& payload, const Options& opt)
{
  const auto p = parse_polynomial(payload);
  const auto rep = gotztst(p);
  if (rep.admissible() && to_polynomial(development_to_e(*rep.dev)) != p)
    throw InvariantBreach("development does not reproduce the polynomial");
  return gotztst_json(p, rep, opt.expand_c);
}

inline Json run_badm(const Json& payload, const Options& opt)
{
  return badm_json(badm(parse_spec(payload)), opt.expand_c);
}

inline Json run_efec(const Json& payload, const Options& opt)
{
  const auto spec = parse_spec(json_detail::field(payload, "spec", "payload"), "spec");
  const auto b = opt_count(payload, "b", "payload");
  CompositionSeries series{to_machine(spec.r, "r"), parse_labels(payload, to_machine(spec.r, "r"), "payload")};
  const auto res = efec_detailed(spec, b, series);

  Json rows = Json::array();
  for (const auto& row : res.rows)
    rows.push_back(Json{{"n", row.n},
                        {"q", bigint_json(row.division.q)},
                        {"r", bigint_json(row.division.rem)},
                        {"g1", bigint_json(row.g1)},
                        {"g2", bigint_json(row.g2)},
                        {"nu", bigint_json(row.nu)}});
  Json out{{"b", b},
           {"regularity_index", res.regularity_index},
           {"p", bigint_json(res.p)},
           {"m", res.m},
           {"rows", rows},
           {"ideal", ideal_json(res.ideal, series.labels)}};

  const std::uint64_t horizon = opt.horizon.value_or(res.m + 3);
  if (monomial_count(horizon, b) > verify_limit) {
    out["verified"] = "skipped";
    return out;
  }
  bool pass = false;
  oracle_rows(res.ideal, spec, horizon, pass);
  if (!pass) throw InvariantBreach("staircase oracle disagrees with H on the EFEC ideal");
  out["verified"] = Json{{"horizon", horizon}, {"pass", true}};
  return out;
}

inline Json run_saturate(const Json& payload, const Options&)
{
  const auto ideal = parse_ideal(payload);
  if (ideal.r != 1) throw InputError("saturation is only supported over a field (r = 1)");
  if (!is_segment_ideal(ideal)) throw InputError("input is not a segment ideal");
  const auto sat = saturate(ideal);
  if (saturate(sat).generators != sat.generators) throw InvariantBreach("saturation is not idempotent");
  return Json{{"input", ideal_json(ideal)}, {"saturation", ideal_json(sat)}};
}

inline Json run_verify(const Json& payload, const Options& opt)
{
  const Json& ideal_payload = json_detail::field(payload, "ideal", "payload");
  const auto ideal = parse_ideal(ideal_payload, "ideal");
  const auto spec = parse_spec(json_detail::field(payload, "spec", "payload"), "spec");
  if (BigInt(ideal.r) != spec.r) throw InputError("ideal.r differs from spec.r");
  std::uint64_t horizon = std::max<std::uint64_t>(max_generator_degree(ideal), regularity_index(spec)) + 3;
  if (payload.contains("horizon")) horizon = parse_count(payload["horizon"], "payload.horizon");
  if (opt.horizon) horizon = *opt.horizon;
  if (monomial_count(horizon, ideal.b) > verify_limit) throw InputError("horizon too large for the staircase oracle");
  bool pass = false;
  Json rows = oracle_rows(ideal, spec, horizon, pass);
  return Json{{"horizon", horizon}, {"pass", pass}, {"segment", is_segment_ideal(ideal)}, {"degrees", rows}};
}

inline Json run_bounds(const Json& payload, const Options& opt)
{
  const auto p = parse_polynomial(json_detail::field(payload, "poly", "payload"), "poly");
  const auto b = opt_count(payload, "b", "payload");
  const BigInt r = parse_bigint(json_detail::field(payload, "r", "payload"), "payload.r");
  if (b == 0 || r < 1) throw InputError("b and r must be positive");
  const A0 a0 = payload.contains("a0") ? parse_a0(payload["a0"], "payload.a0") : A0{Unknown{}};

  Json out{{"polynomial", polynomial_json(p)}, {"b", b}, {"r", bigint_json(r)}};
  const auto art = artinian_development(p, b, r);
  if (art.ok()) {
    const auto& dev = *art.dev;
    out["artinian_development"] = Json{{"q", bigint_json(dev.q)}, {"p", bigint_json(dev.p())},
                                       {"tail", development_json(dev.tail, opt.expand_c)}};
    out["vanishing"] = vanishing_json(vanishing_bounds(dev));
    const auto reg = regularity_index_bound(dev, a0);
    out["reg_index_bound"] = reg.value ? bigint_json(*reg.value) : Json(reg.expression);
    if (dev.q >= 1) {
      const auto cmp = compare_developments(dev);
      if (!cmp.holds) throw InvariantBreach("tail counts exceed the plain development counts");
      out["comparison"] = Json{{"p_counts", bigints_json(cmp.p_counts)},
                               {"s_counts", bigints_json(cmp.s_counts)},
                               {"holds", cmp.holds}};
    }
  } else {
    out["artinian_development"] = nullptr;
    out["reason"] = art.reason;
  }
  const auto t = gotztst(p);
  if (t.admissible() && !t.dev->empty()) {
    out["gotzmann_vanishing"] = vanishing_json(vanishing_bounds(*t.dev));
    Json ineq = Json::array();
    for (const auto& row : e_inequalities(*t.e)) {
      Json j{{"i", row.i}, {"lhs", bigint_json(row.lhs)}};
      j["f"] = row.f ? bigint_json(*row.f) : Json(nullptr);
      j["holds"] = row.holds ? Json(*row.holds) : Json(nullptr);
      if (!row.note.empty()) j["note"] = row.note;
      ineq.push_back(j);
    }
    out["e_inequalities"] = ineq;
  }
  return out;
}

inline Json run_mumford(const Json& payload, const Options& opt)
{
  const auto b = opt_count(payload, "b", "payload");
  const Json& arr = json_detail::field(payload, "a", "payload");
  if (!arr.is_array()) throw InputError("payload.a: expected an array");
  std::vector<BigInt> a;
  for (std::size_t i = 0; i < arr.size(); ++i) a.push_back(parse_bigint(arr[i], "payload.a[" + std::to_string(i) + "]"));
  if (b == 0 || a.size() != b) throw InputError("payload.a: expected b values a_0..a_{b-1}");
  const auto res = mumford_regularity(b, a);
  Json out{{"b", b}, {"difference", polynomial_json(res.difference)}, {"ok", res.ok()}};
  if (res.ok()) {
    out["s"] = bigint_json(*res.s);
    out["development"] = development_json(*res.dev, opt.expand_c);
  } else {
    out["reason"] = res.reason;
  }
  return out;
}

} // namespace detail

/// Runs one subcommand on one payload.
inline Json run_command(const Options& opt, const Json& payload)
{
  const auto& c = opt.subcommand;
  if (c == "gotztst") return detail::run_gotztst(payload, opt);
  if (c == "badm") return detail::run_badm(payload, opt);
  if (c == "efec") return detail::run_efec(payload, opt);
  if (c == "saturate") return detail::run_saturate(payload, opt);
  if (c == "verify") return detail::run_verify(payload, opt);
  if (c == "bounds") return detail::run_bounds(payload, opt);
  if (c == "mumford") return detail::run_mumford(payload, opt);
  throw InputError("unknown subcommand '" + c + "'");
}

namespace detail {

inline std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

inline std::string join(const Json& arr)
{
  std::string s = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? ", " : "") + scalar(arr[i]);
  return s + ")";
}

inline void pretty_development(std::ostream& os, const Json& dev)
{
  os << "Gotzmann development: s = " << scalar(dev["s"]) << ", s_counts = " << join(dev["s_counts"]) << "\n";
  if (dev.contains("c")) os << "c = " << join(dev["c"]) << "\n";
}

inline void pretty_vanishing(std::ostream& os, const Json& rows)
{
  for (const auto& v : rows)
    os << "  H^" << scalar(v["i"]) << " = 0 for n >= " << scalar(v["n_ge"]) << " (a_" << scalar(v["i"])
       << " <= " << scalar(v["a_le"]) << ")" << (v["vacuous"].get<bool>() ? " [vacuous]" : "") << "\n";
}

} // namespace detail

/// Human-readable rendering of a report produced by run_command.
inline std::string render_pretty(const std::string& sub, const Json& r)
{
  using detail::join;
  using detail::scalar;
  std::ostringstream os;
  if (sub == "gotztst") {
    os << "P(X) = " << scalar(r["polynomial"]["text"]) << "\n";
    os << "integrality: " << scalar(r["integrality"]) << "\n";
    if (r.contains("e")) os << "e = " << join(r["e"]) << "\n";
    if (r["admissible"].get<bool>())
      detail::pretty_development(os, r["development"]);
    else
      os << "rejected at step " << scalar(r["rejected_at_step"]) << ": " << scalar(r["reason"]) << "\n";
  } else if (sub == "badm") {
    for (const auto& t : r["trace"]) os << "Step " << scalar(t["step"]) << ": " << scalar(t["detail"]) << "\n";
    if (r["admissible"].get<bool>())
      os << "admissible, b_min = " << scalar(r["b_min"]) << "\n";
    else
      os << "not admissible: " << scalar(r["reason"]) << "\n";
  } else if (sub == "efec") {
    os << "b = " << scalar(r["b"]) << ", i(H) = " << scalar(r["regularity_index"]) << ", p = " << scalar(r["p"])
       << ", m = " << scalar(r["m"]) << "\n";
    for (const auto& row : r["rows"])
      os << "  n = " << scalar(row["n"]) << ": (q, r) = (" << scalar(row["q"]) << ", " << scalar(row["r"])
         << "), (g1, g2) = (" << scalar(row["g1"]) << ", " << scalar(row["g2"]) << "), nu = " << scalar(row["nu"])
         << "\n";
    os << "I = " << scalar(r["ideal"]["text"]) << "\n";
  } else if (sub == "saturate") {
    os << "I = " << scalar(r["input"]["text"]) << "\n";
    os << "I^sat = " << scalar(r["saturation"]["text"]) << "\n";
  } else if (sub == "verify") {
    for (const auto& d : r["degrees"])
      os << "  H(" << scalar(d["n"]) << "): expected " << scalar(d["expected"]) << ", oracle " << scalar(d["oracle"])
         << (d["pass"].get<bool>() ? "" : "  MISMATCH") << "\n";
    os << (r["pass"].get<bool>() ? "pass" : "fail") << " up to degree " << scalar(r["horizon"]) << "\n";
  } else if (sub == "bounds") {
    os << "P(X) = " << scalar(r["polynomial"]["text"]) << ", b = " << scalar(r["b"]) << ", r = " << scalar(r["r"])
       << "\n";
    if (r["artinian_development"].is_null()) {
      os << "no Artinian development: " << scalar(r["reason"]) << "\n";
    } else {
      const auto& a = r["artinian_development"];
      os << "q = " << scalar(a["q"]) << ", p = " << scalar(a["p"]) << ", tail counts = " << join(a["tail"]["s_counts"])
         << "\n";
      os << "vanishing (Artinian form):\n";
      detail::pretty_vanishing(os, r["vanishing"]);
      os << "regularity index <= " << scalar(r["reg_index_bound"]) << "\n";
      if (r.contains("comparison"))
        os << "p_i = " << join(r["comparison"]["p_counts"]) << " <= s_i = " << join(r["comparison"]["s_counts"])
           << "\n";
    }
    if (r.contains("gotzmann_vanishing")) {
      os << "vanishing (Gotzmann form):\n";
      detail::pretty_vanishing(os, r["gotzmann_vanishing"]);
      for (const auto& e : r["e_inequalities"]) {
        os << "  (-1)^" << scalar(e["i"]) << " e_" << scalar(e["i"]) << " = " << scalar(e["lhs"]);
        if (e["f"].is_null())
          os << ": " << scalar(e["note"]) << "\n";
        else
          os << " >= " << scalar(e["f"]) << (e["holds"].get<bool>() ? "" : "  VIOLATED") << "\n";
      }
    }
  } else if (sub == "mumford") {
    os << "difference = " << scalar(r["difference"]["text"]) << "\n";
    if (r["ok"].get<bool>())
      os << "F_" << scalar(r["b"]) << " = s = " << scalar(r["s"]) << "\n";
    else
      os << "failure: " << scalar(r["reason"]) << "\n";
  }
  return os.str();
}

/// Parses the whole input as one JSON document; failing that, as one
/// document per non-empty line.
inline std::vector<Json> read_payloads(const std::string& text, bool& batch)
{
  batch = false;
  try {
    return {Json::parse(text)};
  } catch (const Json::parse_error& whole) {
    std::vector<Json> docs;
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        docs.push_back(Json::parse(line));
      } catch (const Json::parse_error& e) {
        if (lineno == 1) throw InputError(std::string("JSON parse error: ") + whole.what());
        throw InputError("line " + std::to_string(lineno) + ": JSON parse error: " + e.what());
      }
    }
    if (docs.empty()) throw InputError("empty input");
    batch = docs.size() > 1;
    return docs;
  }
}

/// Runs one payload and writes its result; returns the exit code.
inline int run_one(const Options& opt, const Json& payload, bool compact, std::ostream& out, std::ostream& err)
{
  try {
    const Json result = run_command(opt, payload);
    if (opt.output == OutputMode::pretty)
      out << render_pretty(opt.subcommand, result);
    else
      out << (compact ? result.dump() : result.dump(2)) << "\n";
    return ok;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const InvariantBreach& e) {
    err << "internal invariant breach: " << e.what() << "\n";
    return internal_error;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const std::domain_error& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const std::overflow_error& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "internal invariant breach: " << e.what() << "\n";
    return internal_error;
  }
}

/// Reads the payload(s) named by opt.input and runs the subcommand. In batch
/// mode each result is one line and the worst exit code wins.
inline int dispatch(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err)
{
  std::string text;
  if (opt.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(opt.input, std::ios::binary);
    if (!file) {
      err << "input error: cannot open '" << opt.input << "'\n";
      return input_error;
    }
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  std::vector<Json> docs;
  bool batch = false;
  try {
    docs = read_payloads(text, batch);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  }
  int worst = ok;
  for (const auto& doc : docs) worst = std::max(worst, run_one(opt, doc, batch, out, err));
  return worst;
}

} // namespace hilbert::cli
