#pragma once

// Vanishing degrees of local cohomology, regularity-index bounds, the
// effective Mumford regularity, inequalities on Hilbert-Samuel
// coefficients, and lower bounds on Hilbert functions from developments.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hilbert/gotzmann.hpp"
#include "hilbert/integer.hpp"
#include "hilbert/macaulay.hpp"
#include "hilbert/polynomial.hpp"

namespace hilbert {

/// P = q * binom(X + b - 1, b - 1) + G[c'_1, ..., c'_p] with c'_1 <= b - 2.
struct ArtinianDevelopment {
  BigInt q = 0;
  std::uint64_t b = 1;
  GotzmannDevelopment tail;

  BigInt p() const { return tail.length(); }
  /// p_i = #{j : c'_j >= i - 1}.
  BigInt p_count(std::size_t i) const { return tail.count(i); }

  RationalPolynomial polynomial() const
  {
    return binomial_polynomial(BigInt(b - 1), b - 1) * Rational(q) + to_polynomial(development_to_e(tail));
  }
};

struct ArtinianDevelopmentResult {
  std::optional<ArtinianDevelopment> dev;
  std::string reason;

  bool ok() const { return dev.has_value(); }
};

inline ArtinianDevelopmentResult artinian_development(const RationalPolynomial& p, std::uint64_t b, const BigInt& r)
{
  if (b == 0) return {std::nullopt, "number of variables must be positive"};
  if (p.is_zero()) return {ArtinianDevelopment{0, b, {}}, {}};
  const auto verdict = integer_valued_test(p);
  if (!verdict.accepted()) return {std::nullopt, "not integer-valued: " + verdict.reason};
  const auto c = static_cast<std::uint64_t>(p.degree());
  if (c > b - 1) return {std::nullopt, "deg(P) = " + std::to_string(c) + " > b - 1"};
  if (c < b - 1) {
    auto t = gotztst(p);
    if (!t.admissible()) return {std::nullopt, t.reason};
    return {ArtinianDevelopment{0, b, *t.dev}, {}};
  }
  const auto dec = gamma_decompose(p);
  if (dec.gamma > r) return {std::nullopt, "gamma(P) = " + dec.gamma.str() + " exceeds r = " + r.str()};
  auto t = gotztst(dec.remainder);
  if (!t.admissible()) return {std::nullopt, "Gamma_P = " + dec.remainder.str() + ": " + t.reason};
  return {ArtinianDevelopment{dec.gamma, b, *t.dev}, {}};
}

struct VanishingRow {
  std::size_t i = 0;
  /// H^i vanishes in degrees n >= n_ge.
  BigInt n_ge;
  /// Upper bound for a_i = n_ge - 1.
  BigInt a_le;
  bool vacuous = false;
};

/// Thresholds p_i - i + 1 (q > 0) or p_i - i (q = 0), for 1 <= i <= b.
inline std::vector<VanishingRow> vanishing_bounds(const ArtinianDevelopment& dev)
{
  std::vector<VanishingRow> rows;
  for (std::size_t i = 1; i <= dev.b; ++i) {
    BigInt t = dev.p_count(i) - BigInt(i) + (dev.q > 0 ? 1 : 0);
    rows.push_back({i, t, t - 1, t <= 0});
  }
  return rows;
}

/// Thresholds s_i - i for 1 <= i <= d.
inline std::vector<VanishingRow> vanishing_bounds(const GotzmannDevelopment& dev)
{
  std::vector<VanishingRow> rows;
  for (std::size_t i = 1; i <= dev.d(); ++i) {
    BigInt t = dev.count(i) - BigInt(i);
    rows.push_back({i, t, t - 1, t <= 0});
  }
  return rows;
}

struct MinusInfinity {
  friend bool operator==(MinusInfinity, MinusInfinity) { return true; }
};
struct Unknown {
  friend bool operator==(Unknown, Unknown) { return true; }
};
/// a_0, the top nonvanishing degree of the zeroth local cohomology.
using A0 = std::variant<BigInt, MinusInfinity, Unknown>;

struct RegularityBound {
  /// Set unless a_0 is unknown.
  std::optional<BigInt> value;
  std::string expression;
};

/// max{a_0 + 1, p} if q > 0, max{a_0 + 1, p - 1} if q = 0.
inline RegularityBound regularity_index_bound(const ArtinianDevelopment& dev, const A0& a0)
{
  const BigInt floor_term = dev.q > 0 ? dev.p() : dev.p() - 1;
  if (std::holds_alternative<MinusInfinity>(a0)) return {floor_term, floor_term.str()};
  if (std::holds_alternative<Unknown>(a0)) return {std::nullopt, "max(a0 + 1, " + floor_term.str() + ")"};
  const BigInt v = std::max<BigInt>(std::get<BigInt>(a0) + 1, floor_term);
  return {v, v.str()};
}

struct MumfordResult {
  std::optional<BigInt> s;
  RationalPolynomial difference;
  std::optional<GotzmannDevelopment> dev;
  std::string reason;

  bool ok() const { return s.has_value(); }
};

/// F_b(a_0, ..., a_{b-1}): length of the development of
/// binom(X + b - 1, b - 1) - sum_j a_j binom(X, j).
inline MumfordResult mumford_regularity(std::uint64_t b, const std::vector<BigInt>& a)
{
  if (b == 0) throw std::invalid_argument("number of variables must be positive");
  if (a.size() != b) throw std::invalid_argument("expected " + std::to_string(b) + " values a_0..a_{b-1}");
  MumfordResult res;
  res.difference = binomial_polynomial(BigInt(b - 1), b - 1);
  for (std::size_t j = 0; j < a.size(); ++j) res.difference -= binomial_polynomial(0, j) * Rational(a[j]);
  const auto t = gotztst(res.difference);
  if (!t.admissible()) {
    res.reason = "not the Hilbert polynomial of an ideal sheaf: " + t.reason;
    return res;
  }
  res.dev = t.dev;
  res.s = t.dev->length();
  return res;
}

struct EInequality {
  std::size_t i = 0;
  /// (-1)^i e_i.
  BigInt lhs;
  std::optional<BigInt> f;
  std::optional<bool> holds;
  std::string note;
};

/// (-1)^i e_i >= f_i(e_0, ..., e_{i-1}) for 1 <= i < d, where f_i is the
/// value forcing s_{d-i} >= s_{d-i+1}.
inline std::vector<EInequality> e_inequalities(const IntValuedPolynomial& ev)
{
  const std::size_t d = ev.d();
  if (d == 0 || ev.e[0] < 1) throw std::invalid_argument("e_inequalities needs e_0 > 0");
  std::vector<EInequality> out;
  // s[k] = s_{d-k}, grown one level per inequality.
  std::vector<BigInt> s{ev.e[0]};
  bool developable = true;
  for (std::size_t i = 1; i < d; ++i) {
    EInequality row;
    row.i = i;
    row.lhs = (i % 2 == 0) ? ev.e[i] : BigInt(-ev.e[i]);
    if (!developable) {
      row.note = "prefix not developable";
      out.push_back(std::move(row));
      continue;
    }
    BigInt f = s[i - 1];
    for (std::size_t k = 0; k < i; ++k) {
      const BigInt term = binom(s[k] + 1, BigInt(i + 1 - k));
      f += ((i + k) % 2 == 0) ? term : BigInt(-term);
    }
    row.f = f;
    row.holds = row.lhs >= f;
    // Next level: s_{d-i} = (-1)^i e_i - f_i + s_{d-i+1}.
    const BigInt next = row.lhs - f + s[i - 1];
    if (next < s[i - 1]) developable = false;
    s.push_back(next);
    out.push_back(std::move(row));
  }
  return out;
}

struct DevelopmentComparison {
  std::vector<BigInt> p_counts;  // p_1..p_b
  std::vector<BigInt> s_counts;  // s_1..s_b
  bool holds = false;
};

/// Compares the tail counts p_i with the counts s_i of the plain
/// development of the same polynomial.
inline DevelopmentComparison compare_developments(const ArtinianDevelopment& dev)
{
  const auto t = gotztst(dev.polynomial());
  if (!t.admissible()) throw std::logic_error("Artinian development without a plain development: " + t.reason);
  DevelopmentComparison cmp;
  cmp.holds = true;
  for (std::size_t i = 1; i <= dev.b; ++i) {
    cmp.p_counts.push_back(dev.p_count(i));
    cmp.s_counts.push_back(t.dev->count(i));
    if (cmp.p_counts.back() > cmp.s_counts.back()) cmp.holds = false;
  }
  return cmp;
}

/// G[c_1 - i, ..., c_{s_{i+1}} - i](n): lower bound for Delta^i H(n).
inline BigInt lower_bound_function(const GotzmannDevelopment& dev, std::size_t i, const BigInt& n)
{
  return g_eval(dev.lowered(i), n);
}

} // namespace hilbert
