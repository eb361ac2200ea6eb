#pragma once

// Degrevlex monomial ranking, J-segment ideals built by EFEC, a staircase
// Hilbert-function oracle, and saturation over a field.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hilbert/admissibility.hpp"
#include "hilbert/gotzmann.hpp"
#include "hilbert/integer.hpp"
#include "hilbert/macaulay.hpp"

namespace hilbert {

using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t monomial_degree(const Monomial& m)
{
  std::uint64_t d = 0;
  for (auto x : m) d += x;
  return d;
}

namespace detail {

// binom(n, k) in 64 bits; throws std::overflow_error past that.
inline std::uint64_t small_binom(std::uint64_t n, std::uint64_t k)
{
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("monomial count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

} // namespace detail

/// Number of monomials of degree n in b variables.
inline std::uint64_t monomial_count(std::uint64_t n, std::uint64_t b)
{
  if (b == 0) return n == 0 ? 1 : 0;
  return detail::small_binom(n + b - 1, b - 1);
}

/// 1-based position of X^lambda among the degree-|lambda| monomials in
/// decreasing degrevlex order; rank 1 is X_1^n.
inline std::uint64_t monomial_rank(const Monomial& lambda)
{
  if (lambda.empty()) throw std::invalid_argument("monomial needs at least one variable");
  std::uint64_t rank = 1;
  std::uint64_t n = monomial_degree(lambda);
  for (std::size_t b = lambda.size(); b >= 2; --b) {
    const std::uint64_t e = lambda[b - 1];
    // Monomials with smaller X_b-exponent come first.
    rank += monomial_count(n, b) - monomial_count(n - e, b);
    n -= e;
  }
  return rank;
}

inline Monomial monomial_unrank(std::uint64_t n, std::uint64_t b, std::uint64_t k)
{
  if (b == 0) throw std::invalid_argument("monomial needs at least one variable");
  if (k < 1 || k > monomial_count(n, b))
    throw std::out_of_range("rank " + std::to_string(k) + " outside 1.." + std::to_string(monomial_count(n, b)));
  Monomial out(b, 0);
  for (std::uint64_t v = b; v >= 2; --v) {
    std::uint64_t e = 0;
    for (;; ++e) {
      const std::uint64_t block = monomial_count(n - e, v - 1);
      if (k <= block) break;
      k -= block;
    }
    out[v - 1] = static_cast<std::uint32_t>(e);
    n -= e;
  }
  out[0] = static_cast<std::uint32_t>(n);
  return out;
}

/// Symbolic composition series 0 = J_0 < J_1 < ... < J_r = R_0.
struct CompositionSeries {
  std::uint64_t r = 1;
  /// Optional display strings for J_0..J_r.
  std::vector<std::string> labels;
};

/// J_j * X^exps, j the index in the composition series.
struct Generator {
  std::uint64_t degree = 0;
  std::uint64_t j_index = 0;
  Monomial exps;

  friend bool operator==(const Generator&, const Generator&) = default;
};

struct SegmentIdeal {
  std::uint64_t b = 1;
  std::uint64_t r = 1;
  std::vector<Generator> generators;
  std::optional<HilbertFunctionSpec> origin;

  /// Exponent k with J_j = (eps^k) in R_0 = k[eps]/(eps^r).
  std::uint64_t layer(const Generator& g) const { return r - g.j_index; }
};

/// Degree, then rank, then larger J-index first.
inline void sort_generators(std::vector<Generator>& gens)
{
  std::sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const auto ra = monomial_rank(a.exps), rb = monomial_rank(b.exps);
    if (ra != rb) return ra < rb;
    return a.j_index > b.j_index;
  });
}

/// Drops generators contained in the submodule generated by the others.
inline std::vector<Generator> minimalize(std::vector<Generator> gens)
{
  auto divides = [](const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  std::vector<Generator> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].j_index == 0) continue;
    bool redundant = false;
    for (std::size_t k = 0; k < gens.size() && !redundant; ++k) {
      if (k == i || gens[k].j_index < gens[i].j_index || !divides(gens[k].exps, gens[i].exps)) continue;
      // Ties are broken by position so exactly one copy survives.
      redundant = gens[k].j_index > gens[i].j_index || gens[k].exps != gens[i].exps || k < i;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  sort_generators(out);
  return out;
}

/// One row of the EFEC bookkeeping for degree n.
struct EfecRow {
  std::uint64_t n = 0;
  DivisionPair division;
  BigInt g1;
  BigInt g2;
  BigInt nu;
};

struct EfecResult {
  SegmentIdeal ideal;
  std::uint64_t regularity_index = 0;
  BigInt p = 0;
  std::uint64_t m = 0;
  std::vector<EfecRow> rows;
};

/// The J-segment ideal I_{H,J} in R_0[X_1..X_b] for a b-admissible H.
inline EfecResult efec_detailed(const HilbertFunctionSpec& spec, std::uint64_t b, const CompositionSeries& series)
{
  if (b == 0) throw std::invalid_argument("number of variables must be positive");
  if (BigInt(series.r) != spec.r)
    throw std::invalid_argument("composition series length " + std::to_string(series.r) + " differs from H(0) = " +
                                spec.r.str());
  const auto adm = badm(spec);
  if (!adm.admissible) throw std::invalid_argument("H is not admissible: " + adm.reason);
  if (b < *adm.b_min)
    throw std::invalid_argument("H is not " + std::to_string(b) + "-admissible (b_min = " +
                                std::to_string(*adm.b_min) + ")");

  EfecResult res;
  const auto h = normalize(spec);
  res.regularity_index = regularity_index(h);
  if (!h.tail.is_zero()) {
    const auto c = static_cast<std::uint64_t>(h.tail.degree());
    if (b == c + 1) {
      const auto dec = gamma_decompose(h.tail);
      res.p = gotztst(dec.remainder).dev->length();
    } else {
      res.p = gotztst(h.tail).dev->length();
    }
  }
  res.m = std::max<std::uint64_t>(res.regularity_index, to_machine(res.p, "p"));

  const std::uint64_t r = series.r;
  res.ideal.b = b;
  res.ideal.r = r;
  res.ideal.origin = spec;
  auto emit = [&](std::uint64_t n, const BigInt& j, std::uint64_t from, std::uint64_t to) {
    if (j <= 0) return;  // J_0 = 0
    const auto ji = to_machine(j, "layer");
    for (std::uint64_t k = from; k <= to; ++k) res.ideal.generators.push_back({n, ji, monomial_unrank(n, b, k)});
  };

  DivisionPair prev{h.r, 0};
  for (std::uint64_t n = 1; n <= res.m; ++n) {
    const DivisionPair cur = euclid_division(h, n, b);
    const BigInt bound = up_both(prev.rem, n - 1);
    EfecRow row{n, cur, prev.q - cur.q, bound - cur.rem, std::min(cur.rem, bound)};
    const std::uint64_t big_n = monomial_count(n, b);
    const auto rem = to_machine(cur.rem, "r(n)");
    const BigInt upper = BigInt(r) - cur.q - 1;
    const BigInt lower = BigInt(r) - cur.q;
    if (row.g1 > 1) {
      emit(n, upper, 1, rem);
      emit(n, lower, rem + 1, big_n);
    } else if (row.g1 == 1) {
      emit(n, upper, 1, to_machine(row.nu, "nu(n)"));
      emit(n, lower, rem + 1, big_n);
    } else if (row.g1 == 0) {
      if (row.g2 > 0) emit(n, lower, rem + 1, to_machine(bound, "r(n) + g2(n)"));
    } else {
      throw std::logic_error("q(n) increased at degree " + std::to_string(n));
    }
    res.rows.push_back(std::move(row));
    prev = cur;
  }
  return res;
}

inline SegmentIdeal efec(const HilbertFunctionSpec& spec, std::uint64_t b, const CompositionSeries& series)
{
  return efec_detailed(spec, b, series).ideal;
}

/// Threshold maps t_n, indexed by rank - 1: J_{t_n(lambda)} X^lambda lies in
/// I_n and no larger layer does.
struct Staircase {
  std::uint64_t b = 1;
  std::uint64_t r = 1;
  std::vector<std::vector<std::uint64_t>> thresholds;

  BigInt hilbert(std::uint64_t n) const
  {
    BigInt total = 0;
    for (auto t : thresholds.at(n)) total += r - t;
    return total;
  }
};

namespace detail {

// All exponent vectors of degree n in b variables, in no particular order.
inline void enumerate_monomials(std::uint64_t n, std::uint64_t b, std::vector<Monomial>& out)
{
  Monomial cur(b, 0);
  auto rec = [&](auto&& self, std::size_t var, std::uint64_t left) -> void {
    if (var + 1 == b) {
      cur[var] = static_cast<std::uint32_t>(left);
      out.push_back(cur);
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      cur[var] = static_cast<std::uint32_t>(e);
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, n);
}

} // namespace detail

/// Degreewise closure of the generators up to the horizon.
inline Staircase build_staircase(const SegmentIdeal& ideal, std::uint64_t horizon)
{
  Staircase st{ideal.b, ideal.r, {}};
  st.thresholds.reserve(horizon + 1);
  for (std::uint64_t n = 0; n <= horizon; ++n) {
    std::vector<std::uint64_t> cur(monomial_count(n, ideal.b), 0);
    for (const auto& g : ideal.generators) {
      if (g.exps.size() != ideal.b) throw std::invalid_argument("generator has the wrong number of variables");
      if (g.j_index > ideal.r) throw std::invalid_argument("generator layer exceeds r");
      if (monomial_degree(g.exps) == n) {
        auto& t = cur[monomial_rank(g.exps) - 1];
        t = std::max(t, g.j_index);
      }
    }
    if (n > 0) {
      const auto& prev = st.thresholds.back();
      std::vector<Monomial> mons;
      detail::enumerate_monomials(n, ideal.b, mons);
      for (auto& mu : mons) {
        auto& t = cur[monomial_rank(mu) - 1];
        for (std::size_t j = 0; j < mu.size(); ++j) {
          if (mu[j] == 0) continue;
          --mu[j];
          t = std::max(t, prev[monomial_rank(mu) - 1]);
          ++mu[j];
        }
      }
    }
    st.thresholds.push_back(std::move(cur));
  }
  return st;
}

/// H(0..horizon) of R_0[X]/I computed from the staircase.
inline std::vector<BigInt> staircase_hilbert(const SegmentIdeal& ideal, std::uint64_t horizon)
{
  const auto st = build_staircase(ideal, horizon);
  std::vector<BigInt> out;
  for (std::uint64_t n = 0; n <= horizon; ++n) out.push_back(st.hilbert(n));
  return out;
}

inline std::uint64_t max_generator_degree(const SegmentIdeal& ideal)
{
  std::uint64_t d = 0;
  for (const auto& g : ideal.generators) d = std::max(d, monomial_degree(g.exps));
  return d;
}

/// Degreewise: thresholds non-decreasing in rank and spanning at most two
/// adjacent layers. Checked up to one degree past the generators.
inline bool is_segment_ideal(const SegmentIdeal& ideal)
{
  const auto st = build_staircase(ideal, max_generator_degree(ideal) + 1);
  for (const auto& t : st.thresholds) {
    if (t.empty()) continue;
    if (!std::is_sorted(t.begin(), t.end())) return false;
    if (t.back() - t.front() > 1) return false;
  }
  return true;
}

namespace detail {

inline void require_field_segment(const SegmentIdeal& ideal)
{
  if (ideal.r != 1) throw std::invalid_argument("saturation is only supported over a field (r = 1)");
  if (!is_segment_ideal(ideal)) throw std::invalid_argument("input is not a segment ideal");
}

} // namespace detail

/// (I : X_1^infinity) for a segment ideal over a field.
inline SegmentIdeal saturate(const SegmentIdeal& ideal)
{
  detail::require_field_segment(ideal);
  SegmentIdeal out{ideal.b, 1, {}, std::nullopt};
  for (auto g : ideal.generators) {
    if (g.j_index == 0) continue;
    g.exps[0] = 0;
    g.degree = monomial_degree(g.exps);
    out.generators.push_back(std::move(g));
  }
  out.generators = minimalize(std::move(out.generators));
  return out;
}

/// Saturation from the finite colon family (I_{n+i} : X_1^i), n <= s,
/// i <= m - n, read off the staircase.
inline SegmentIdeal saturate_from_colons(const SegmentIdeal& ideal, std::uint64_t s, std::uint64_t m)
{
  detail::require_field_segment(ideal);
  const auto st = build_staircase(ideal, std::max(s, m));
  SegmentIdeal out{ideal.b, 1, {}, std::nullopt};
  for (std::uint64_t n = 0; n <= s; ++n) {
    std::vector<Monomial> mons;
    detail::enumerate_monomials(n, ideal.b, mons);
    for (const auto& alpha : mons) {
      for (std::uint64_t i = 0; n + i <= m; ++i) {
        if (n + i == 0) continue;
        Monomial shifted = alpha;
        shifted[0] += static_cast<std::uint32_t>(i);
        if (st.thresholds[n + i][monomial_rank(shifted) - 1] >= 1) {
          out.generators.push_back({n, 1, alpha});
          break;
        }
      }
    }
  }
  out.generators = minimalize(std::move(out.generators));
  return out;
}

/// Upper bound on the minimal number of generators of any homogeneous ideal
/// over a field with Hilbert function H.
inline BigInt nu_bound(const HilbertFunctionSpec& spec)
{
  if (spec.r != 1) throw std::invalid_argument("nu_bound needs r = 1");
  const auto adm = badm(spec);
  if (!adm.admissible) throw std::invalid_argument("H is not admissible: " + adm.reason);
  const auto h = normalize(spec);
  const BigInt s = h.tail.is_zero() ? BigInt(0) : gotztst(h.tail).dev->length();
  const std::uint64_t m = std::max<std::uint64_t>(regularity_index(h), to_machine(s, "s"));
  BigInt total = 0;
  for (std::uint64_t n = 2; n <= m; ++n) total += up_both(h.value(n - 1), n - 1) - h.value(n);
  return total;
}

inline std::string format_monomial(const Monomial& m)
{
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += "X_" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// "eps^k·X^lambda" with k = r - j, or the series label for J_j if given.
inline std::string format_generator(const SegmentIdeal& ideal, const Generator& g,
                                    const std::vector<std::string>& labels = {})
{
  std::string prefix;
  if (!labels.empty()) {
    if (labels.size() != ideal.r + 1) throw std::invalid_argument("composition series needs r + 1 labels");
    prefix = labels[g.j_index];
  } else {
    const auto k = ideal.layer(g);
    if (k == 1) prefix = "ε";
    if (k > 1) prefix = "ε^" + std::to_string(k);
  }
  const std::string mon = format_monomial(g.exps);
  if (prefix.empty()) return mon;
  return prefix + "·" + mon;
}

inline std::string format_ideal(const SegmentIdeal& ideal, const std::vector<std::string>& labels = {})
{
  if (ideal.generators.empty()) return "0";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    if (i) out += ", ";
    out += format_generator(ideal, ideal.generators[i], labels);
  }
  return out + ")";
}

} // namespace hilbert
