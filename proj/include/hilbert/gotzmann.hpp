#pragma once

// Gotzmann developments
//   P(X) = binom(X + c_1, c_1) + binom(X + c_2 - 1, c_2) + ... + binom(X + c_s - (s-1), c_s)
// with c_1 >= ... >= c_s >= 0. Developments are kept as the counts
// s_q = #{i : c_i >= q - 1}, q = 1..d, never as explicit coefficient lists:
// realistic inputs have developments with 10^5 terms and more.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbert/integer.hpp"
#include "hilbert/macaulay.hpp"
#include "hilbert/polynomial.hpp"

namespace hilbert {

class GotzmannDevelopment {
public:
  GotzmannDevelopment() = default;

  /// counts[q-1] = s_q. Throws std::invalid_argument unless the counts are
  /// non-increasing and all positive.
  explicit GotzmannDevelopment(std::vector<BigInt> counts) : counts_(std::move(counts))
  {
    for (std::size_t q = 0; q < counts_.size(); ++q) {
      if (counts_[q] < 1) throw std::invalid_argument("Gotzmann counts must be positive");
      if (q > 0 && counts_[q] > counts_[q - 1])
        throw std::invalid_argument("Gotzmann counts must be non-increasing");
    }
  }

  /// Development of the zero polynomial.
  bool empty() const { return counts_.empty(); }

  /// Number of counts; the developed polynomial has degree d - 1.
  std::size_t d() const { return counts_.size(); }

  /// Length s = s_1 (0 for the zero polynomial).
  BigInt length() const { return counts_.empty() ? BigInt(0) : counts_.front(); }

  /// s_q for q >= 1; zero past d.
  BigInt count(std::size_t q) const { return q >= 1 && q <= counts_.size() ? counts_[q - 1] : BigInt(0); }

  const std::vector<BigInt>& counts() const { return counts_; }

  /// c_1, ..., c_s. Only sensible for short developments.
  std::vector<std::uint64_t> coefficients() const
  {
    std::vector<std::uint64_t> c;
    c.reserve(to_machine<std::size_t>(length(), "development length"));
    for (std::size_t j = counts_.size(); j >= 1; --j) {
      const BigInt run = count(j) - count(j + 1);
      for (BigInt i = 0; i < run; ++i) c.push_back(j - 1);
    }
    return c;
  }

  static GotzmannDevelopment from_coefficients(const std::vector<std::uint64_t>& c)
  {
    if (c.empty()) return {};
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] > c[i - 1]) throw std::invalid_argument("Gotzmann coefficients must be non-increasing");
    std::vector<BigInt> counts(c.front() + 1, 0);
    for (auto ci : c)
      for (std::uint64_t q = 0; q <= ci; ++q) ++counts[q];
    return GotzmannDevelopment(std::move(counts));
  }

  /// Development with every coefficient lowered by i, dropping those below
  /// i: G[c_1 - i, ..., c_{s_{i+1}} - i].
  GotzmannDevelopment lowered(std::size_t i) const
  {
    if (i >= counts_.size()) return {};
    return GotzmannDevelopment(std::vector<BigInt>(counts_.begin() + static_cast<long>(i), counts_.end()));
  }

  friend bool operator==(const GotzmannDevelopment&, const GotzmannDevelopment&) = default;

private:
  std::vector<BigInt> counts_;
};

/// Forward relations e_0 = s_d, e_1 = binom(s_d + 1, 2) - s_{d-1}, ...,
/// e_j = sum_{k<j} (-1)^k binom(s_{d-k} + 1, j + 1 - k) + (-1)^j s_{d-j}.
inline IntValuedPolynomial development_to_e(const GotzmannDevelopment& dev)
{
  const std::size_t d = dev.d();
  std::vector<BigInt> e(d);
  for (std::size_t j = 0; j < d; ++j) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < j; ++k) {
      const BigInt term = binom(dev.count(d - k) + 1, BigInt(j + 1 - k));
      acc += (k % 2 == 0) ? term : BigInt(-term);
    }
    acc += (j % 2 == 0) ? dev.count(d - j) : BigInt(-dev.count(d - j));
    e[j] = std::move(acc);
  }
  return {std::move(e)};
}

struct DevelopmentResult {
  std::optional<GotzmannDevelopment> dev;
  /// Level q at which s_q < s_{q+1} or s_q < 1 appeared.
  std::optional<std::size_t> failed_level;
  std::string reason;

  bool ok() const { return dev.has_value(); }
};

/// Inverts development_to_e one level at a time, checking monotonicity.
inline DevelopmentResult solve_development(const IntValuedPolynomial& ev)
{
  const std::size_t d = ev.d();
  if (d == 0) return {GotzmannDevelopment{}, std::nullopt, {}};
  if (ev.e[0] < 1)
    return {std::nullopt, d, "e_0 = " + ev.e[0].str() + " is not positive"};

  // counts[q-1] = s_q, filled from q = d downwards.
  std::vector<BigInt> counts(d);
  counts[d - 1] = ev.e[0];
  for (std::size_t j = 1; j < d; ++j) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < j; ++k) {
      const BigInt term = binom(counts[d - k - 1] + 1, BigInt(j + 1 - k));
      acc += (k % 2 == 0) ? term : BigInt(-term);
    }
    BigInt s = ev.e[j] - acc;
    if (j % 2 == 1) s = -s;
    const std::size_t level = d - j;
    if (s < counts[level]) {
      return {std::nullopt, level,
              "s-monotonicity violated at level " + std::to_string(level) + ": s_" + std::to_string(level) +
                  " = " + s.str() + " < s_" + std::to_string(level + 1) + " = " + counts[level].str()};
    }
    counts[level - 1] = std::move(s);
  }
  return {GotzmannDevelopment(std::move(counts)), std::nullopt, {}};
}

struct GotzTstReport {
  IntegralityVerdict integrality;
  std::optional<IntValuedPolynomial> e;
  std::optional<GotzmannDevelopment> dev;
  /// 1: integrality screen, 3: development solve; 0 when accepted.
  int rejected_at_step = 0;
  std::string reason;

  bool admissible() const { return dev.has_value(); }
};

/// Integrality screen, Hilbert-Samuel coefficients, then the development.
inline GotzTstReport gotztst(const RationalPolynomial& p)
{
  GotzTstReport report;
  report.integrality = integer_valued_test(p);
  if (report.integrality.kind == IntegralityKind::zero) {
    report.e = IntValuedPolynomial{};
    report.dev = GotzmannDevelopment{};
    return report;
  }
  if (!report.integrality.accepted()) {
    report.rejected_at_step = 1;
    report.reason = report.integrality.reason;
    return report;
  }
  report.e = hilbert_samuel_coeffs(p);
  auto solved = solve_development(*report.e);
  if (!solved.ok()) {
    report.rejected_at_step = 3;
    report.reason = "no Gotzmann development: " + solved.reason;
    return report;
  }
  report.dev = std::move(solved.dev);
  return report;
}

/// G[c_1, ..., c_s](n): the first min(n + 1, s) summands of the development
/// evaluated at n. Each run of equal coefficients is summed with the
/// hockey-stick identity, so the cost is O(d) binomials regardless of s.
inline BigInt g_eval(const GotzmannDevelopment& dev, const BigInt& n)
{
  if (n < 0) throw std::invalid_argument("g_eval needs n >= 0");
  BigInt total = 0;
  const BigInt limit = n + 1;
  for (std::size_t j = 1; j <= dev.d(); ++j) {
    const BigInt c(j - 1);
    const BigInt first = dev.count(j + 1);  // summands i in (first, last]
    const BigInt last = std::min<BigInt>(dev.count(j), limit);
    if (last <= first) continue;
    total += binom(n + c - first + 1, c + 1) - binom(n + c - last + 1, c + 1);
  }
  return total;
}

struct GammaDecomposition {
  BigInt gamma;
  RationalPolynomial remainder;
  /// True when the polynomial division remainder was negative and one copy
  /// of binom(X + c, c) moved into the remainder.
  bool borrowed = false;
};

/// P = gamma * binom(X + c, c) + Gamma with P(n) = gamma * binom(n + c, c) + Gamma(n)
/// the Euclidean division for all large n.
inline GammaDecomposition gamma_decompose(const RationalPolynomial& p)
{
  const auto verdict = integer_valued_test(p);
  if (!verdict.accepted())
    throw std::invalid_argument("gamma_decompose needs a nonzero integer-valued polynomial");
  const auto c = static_cast<std::uint64_t>(p.degree());
  const BigInt a = to_integer(p.leading() * Rational(factorial(c)));
  const RationalPolynomial base = binomial_polynomial(BigInt(c), c);
  RationalPolynomial q = p - base * Rational(a);
  if (q.is_zero() || q.leading() > 0) return {a, std::move(q), false};
  return {a - 1, q + base, true};
}

struct OracleResult {
  std::optional<GotzmannDevelopment> dev;
  /// Last expansion index tried.
  std::uint64_t n = 0;
  std::string reason;

  bool ok() const { return dev.has_value(); }
};

namespace detail {

// Reads c_i = top - bottom off the n-binomial expansion of v. Returns the
// counts if the c's are non-increasing.
inline std::optional<std::vector<BigInt>> candidate_counts(const BigInt& v, std::uint64_t n)
{
  std::vector<BigInt> counts;
  BigInt prev = -1;
  bool monotone = true;
  visit_expansion(v, n, [&](const BinomialTerm& t) {
    const BigInt c = t.top - t.bottom;
    if ((prev >= 0 && c > prev) || (prev < 0 && c > BigInt(1) << 20)) {
      monotone = false;
      return false;
    }
    if (prev < 0) counts.assign(static_cast<std::size_t>(c) + 1, 0);
    prev = c;
    for (std::size_t q = 0; q <= static_cast<std::size_t>(c); ++q) ++counts[q];
    return true;
  });
  if (!monotone) return std::nullopt;
  return counts;
}

} // namespace detail

/// Independent route to the development: for n beyond the length s, the
/// development evaluated at n is exactly the n-binomial expansion of P(n),
/// so c_i can be read off as top - bottom. Doubles n from 2 until two
/// consecutive reads agree and reproduce P, or n exceeds the cap.
inline OracleResult greedy_development_oracle(const RationalPolynomial& p, std::uint64_t cap = std::uint64_t{1} << 21)
{
  if (p.is_zero()) return {GotzmannDevelopment{}, 0, {}};
  if (p.leading() <= 0) return {std::nullopt, 0, "leading coefficient not positive"};
  std::optional<std::vector<BigInt>> previous;
  std::uint64_t n = 2;
  for (; n <= cap; n *= 2) {
    const Rational value = p(Rational(BigInt(n)));
    if (!is_integral(value) || value < 0) {
      previous.reset();
      continue;
    }
    auto counts = detail::candidate_counts(to_integer(value), n);
    if (counts && previous && *counts == *previous) {
      GotzmannDevelopment dev(*counts);
      if (to_polynomial(development_to_e(dev)) == p) return {std::move(dev), n, {}};
    }
    previous = std::move(counts);
  }
  return {std::nullopt, n / 2, "oracle inconclusive up to n = " + std::to_string(n / 2)};
}

} // namespace hilbert
