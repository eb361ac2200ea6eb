#pragma once

// Binomial coefficients, d-binomial (Macaulay) expansions and the four
// shift operators acting on them.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hilbert/integer.hpp"

namespace hilbert {

/// binom(k, j) with binom(k, j) = 0 for k < j and binom(k, 0) = 1.
/// Negative arguments yield 0. The cost is min(j, k - j) multiplications.
inline BigInt binom(const BigInt& k, const BigInt& j)
{
  if (j < 0 || k < 0 || k < j) return 0;
  const BigInt low = std::min<BigInt>(j, k - j);
  const auto steps = to_machine(low, "binomial lower index");
  BigInt result = 1;
  const BigInt base = k - low;
  for (std::uint64_t i = 1; i <= steps; ++i) {
    result *= base + i;
    result /= i;
  }
  return result;
}

/// Generalised binomial x(x-1)...(x-j+1)/j! for any integer x and j >= 0.
/// Agrees with binom() for x >= 0 and is the value of the polynomial
/// binom(X, j) at X = x.
inline BigInt binom_poly(const BigInt& x, std::uint64_t j)
{
  BigInt result = 1;
  for (std::uint64_t i = 0; i < j; ++i) {
    result *= x - i;
    result /= i + 1;
  }
  return result;
}

struct BinomialTerm {
  BigInt top;
  std::uint64_t bottom = 0;

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// The d-binomial expansion n = binom(k_d, d) + ... + binom(k_delta, delta)
/// with k_d > ... > k_delta >= delta >= 1. Zero has no terms.
struct BinomialExpansion {
  std::uint64_t d = 1;
  std::vector<BinomialTerm> terms;

  BigInt value() const
  {
    BigInt sum = 0;
    for (const auto& t : terms) sum += binom(t.top, t.bottom);
    return sum;
  }

  friend bool operator==(const BinomialExpansion&, const BinomialExpansion&) = default;
};

namespace detail {

// Largest c >= 0 with binom(j + c, j) <= rem, given rem >= 1.
inline BigInt greedy_offset(const BigInt& rem, std::uint64_t j)
{
  const BigInt bottom(j);
  BigInt lo = 0;  // binom(j + lo, j) <= rem holds
  BigInt hi = 1;
  while (binom(bottom + hi, bottom) <= rem) {
    lo = hi;
    hi *= 2;
  }
  // invariant: f(lo) <= rem < f(hi)
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    if (binom(bottom + mid, bottom) <= rem)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

} // namespace detail

/// Streams the terms of the d-binomial expansion of n, largest bottom
/// first. The visitor returns false to stop early.
template <typename Visitor>
void visit_expansion(const BigInt& n, std::uint64_t d, Visitor&& visit)
{
  if (d == 0) throw std::invalid_argument("expansion index must be positive");
  if (n < 0) throw std::invalid_argument("cannot expand a negative integer");
  BigInt rem = n;
  for (std::uint64_t j = d; j >= 1 && rem > 0; --j) {
    BinomialTerm term{BigInt(j) + detail::greedy_offset(rem, j), j};
    rem -= binom(term.top, BigInt(j));
    if (!visit(std::move(term))) return;
  }
}

inline BinomialExpansion expand(const BigInt& n, std::uint64_t d)
{
  BinomialExpansion out{d, {}};
  visit_expansion(n, d, [&](BinomialTerm t) {
    out.terms.push_back(std::move(t));
    return true;
  });
  return out;
}

namespace detail {

template <typename Shift>
BigInt apply_operator(const BigInt& n, std::uint64_t d, Shift shift)
{
  if (n == 0) return 0;
  BigInt sum = 0;
  for (const auto& t : expand(n, d).terms) sum += shift(t);
  return sum;
}

} // namespace detail

/// (n_d)^+: every top raised by one.
inline BigInt up_top(const BigInt& n, std::uint64_t d)
{
  return detail::apply_operator(n, d, [](const BinomialTerm& t) {
    return binom(t.top + 1, BigInt(t.bottom));
  });
}

/// (n_d)^-: every top lowered by one.
inline BigInt down_top(const BigInt& n, std::uint64_t d)
{
  return detail::apply_operator(n, d, [](const BinomialTerm& t) {
    return binom(t.top - 1, BigInt(t.bottom));
  });
}

/// (n_d)_+^dagger: tops and bottoms raised by one. This is the Macaulay
/// bound on the next Hilbert function value.
inline BigInt up_both(const BigInt& n, std::uint64_t d)
{
  return detail::apply_operator(n, d, [](const BinomialTerm& t) {
    return binom(t.top + 1, BigInt(t.bottom) + 1);
  });
}

/// (n_d)_-^box: tops and bottoms lowered by one.
inline BigInt down_both(const BigInt& n, std::uint64_t d)
{
  return detail::apply_operator(n, d, [](const BinomialTerm& t) {
    return binom(t.top - 1, BigInt(t.bottom) - 1);
  });
}

} // namespace hilbert
