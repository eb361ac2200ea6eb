#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "test_support.hpp"

using namespace hilbert;

namespace {

// Linear-scan greedy expansion over a Pascal table.
std::vector<std::pair<long, long>> pascal_expansion(long n, long d)
{
  // Entries saturate at a cap far above every queried n.
  static std::vector<std::vector<long>> table = [] {
    constexpr long cap = 1L << 40;
    std::vector<std::vector<long>> t(3100, std::vector<long>(12, 0));
    for (int k = 0; k < 3100; ++k) {
      t[k][0] = 1;
      for (int j = 1; j < 12 && j <= k; ++j) t[k][j] = std::min(cap, t[k - 1][j - 1] + (j <= k - 1 ? t[k - 1][j] : 0));
    }
    return t;
  }();
  std::vector<std::pair<long, long>> out;
  for (long j = d; j >= 1 && n > 0; --j) {
    long k = j;
    while (table[k + 1][j] <= n) ++k;
    out.emplace_back(k, j);
    n -= table[k][j];
  }
  return out;
}

// Def 2.6 directly: larger degree wins, else the last nonzero entry of
// lambda - mu is negative.
bool degrevlex_greater(const Monomial& l, const Monomial& m)
{
  const auto dl = monomial_degree(l), dm = monomial_degree(m);
  if (dl != dm) return dl > dm;
  for (std::size_t i = l.size(); i-- > 0;)
    if (l[i] != m[i]) return l[i] < m[i];
  return false;
}

std::vector<Monomial> all_monomials(std::uint64_t n, std::uint64_t b)
{
  std::vector<Monomial> out;
  Monomial cur(b, 0);
  auto rec = [&](auto&& self, std::size_t v, std::uint64_t left) -> void {
    if (v + 1 == b) {
      cur[v] = static_cast<std::uint32_t>(left);
      out.push_back(cur);
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      cur[v] = static_cast<std::uint32_t>(e);
      self(self, v + 1, left - e);
    }
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end(), degrevlex_greater);
  return out;
}

// Macaulay's bound through monomials: keep the a largest degree-d monomials
// outside I_d, so I_d is the segment of the smallest ones; count what
// R_1 I_d misses in degree d + 1.
long segment_growth(long a, std::uint64_t d, std::uint64_t b)
{
  const auto deg_d = all_monomials(d, b);
  std::set<Monomial> next_in_ideal;
  for (std::size_t i = static_cast<std::size_t>(a); i < deg_d.size(); ++i)
    for (std::size_t v = 0; v < b; ++v) {
      Monomial m = deg_d[i];
      ++m[v];
      next_in_ideal.insert(m);
    }
  return static_cast<long>(monomial_count(d + 1, b) - next_in_ideal.size());
}

} // namespace

TEST(Binom, SmallValues)
{
  EXPECT_EQ(binom(5, 3), 10);
  EXPECT_EQ(binom(2, 5), 0);
  EXPECT_EQ(binom(583, 2), 169653);
  EXPECT_EQ(binom(7, 0), 1);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(-1, 0), 0);
}

TEST(Binom, LargeArgumentsAreExact)
{
  EXPECT_EQ(binom(100, 50).str(), "100891344545564193334812497256");
  for (long k = 0; k < 60; ++k)
    for (long j = 1; j <= k; ++j) EXPECT_EQ(binom(k, j), binom(k - 1, j - 1) + binom(k - 1, j));
}

TEST(BinomPoly, AgreesWithBinomOnNaturals)
{
  for (long x = 0; x < 20; ++x)
    for (std::uint64_t j = 0; j < 8; ++j) EXPECT_EQ(binom_poly(x, j), binom(x, BigInt(j)));
  EXPECT_EQ(binom_poly(-1, 3), -1);
  EXPECT_EQ(binom_poly(-2, 2), 3);
}

TEST(Expand, Examples)
{
  EXPECT_EQ(expand(19, 3).terms, (std::vector<BinomialTerm>{{5, 3}, {4, 2}, {3, 1}}));
  EXPECT_TRUE(expand(0, 4).terms.empty());
  EXPECT_EQ(expand(28, 4).terms, (std::vector<BinomialTerm>{{6, 4}, {5, 3}, {3, 2}}));
}

TEST(Expand, InvariantsAndPascalOracle)
{
  for (long d = 1; d <= 10; ++d) {
    for (long n = 0; n <= 20000; n += (n < 3000 ? 1 : 37)) {
      const auto ex = expand(n, d);
      ASSERT_EQ(ex.value(), n);
      for (std::size_t i = 0; i < ex.terms.size(); ++i) {
        ASSERT_EQ(ex.terms[i].bottom, static_cast<std::uint64_t>(d) - i);
        if (i > 0) {
          ASSERT_LT(ex.terms[i].top, ex.terms[i - 1].top);
        }
      }
      if (!ex.terms.empty()) {
        ASSERT_GE(ex.terms.back().top, BigInt(ex.terms.back().bottom));
      }
      if (n <= 3000) {
        const auto oracle = pascal_expansion(n, d);
        ASSERT_EQ(oracle.size(), ex.terms.size());
        for (std::size_t i = 0; i < oracle.size(); ++i) ASSERT_EQ(ex.terms[i].top, oracle[i].first);
      }
    }
  }
}

TEST(Expand, HugeValues)
{
  const BigInt n = binom(BigInt(10000), BigInt(7)) + binom(BigInt(500), BigInt(6)) + 3;
  const auto ex = expand(n, 7);
  EXPECT_EQ(ex.value(), n);
  EXPECT_EQ(ex.terms.front().top, 10000);
  EXPECT_EQ(ex.terms[1].top, 500);
}

TEST(Operators, Examples)
{
  EXPECT_EQ(up_both(19, 3), 31);
  EXPECT_EQ(up_both(0, 5), 0);
  EXPECT_EQ(down_top(19, 3), 9);
  EXPECT_EQ(up_both(28, 4), 40);
  EXPECT_EQ(up_top(0, 2), 0);
  EXPECT_EQ(down_both(0, 2), 0);
  EXPECT_EQ(up_both(2, 1), 3);
}

TEST(Operators, UpBothMatchesSegmentGrowth)
{
  for (std::uint64_t d = 1; d <= 3; ++d) {
    for (long a = 1; a <= 40; ++a) {
      std::uint64_t b = 1;
      while (monomial_count(d, b) < static_cast<std::uint64_t>(a)) ++b;
      for (std::uint64_t bb = b; bb <= b + 1; ++bb)
        EXPECT_EQ(up_both(a, d), segment_growth(a, d, bb)) << "a=" << a << " d=" << d << " b=" << bb;
    }
  }
}

TEST(Operators, LemmaTwoOneSmallRange)
{
  for (std::uint64_t d = 1; d <= 4; ++d) {
    std::vector<std::vector<BigInt>> tops;
    for (long n = 0; n <= 300; ++n) {
      std::vector<BigInt> t(d, 0);
      for (const auto& term : expand(n, d).terms) t[d - term.bottom] = term.top;
      tops.push_back(t);
    }
    for (long n = 1; n <= 300; ++n)
      for (long m = n + 1; m <= 300; ++m) {
        ASSERT_TRUE(tops[n] < tops[m]);
        ASSERT_LT(up_top(n, d), up_top(m, d));
        ASSERT_LE(down_top(n, d), down_top(m, d));
        ASSERT_LT(up_both(n, d), up_both(m, d));
        ASSERT_LE(down_both(n, d), down_both(m, d));
      }
  }
}

TEST(Operators, LemmaTwoOnePartTwo)
{
  for (std::uint64_t d = 1; d <= 6; ++d)
    for (long n = 2; n <= 3000; ++n) {
      const auto ex = expand(n, d);
      if (ex.terms.back().top > BigInt(ex.terms.back().bottom)) {
        ASSERT_LT(down_top(n - 1, d), down_top(n, d));
      }
    }
}

TEST(Operators, RobbianoIdentities)
{
  for (std::uint64_t d = 1; d <= 6; ++d)
    for (long r = 0; r <= 3000; ++r) {
      ASSERT_EQ(up_both(down_top(r, d), d), up_both(r, d) - r) << r << " " << d;
      ASSERT_EQ(r - down_top(r, d), down_both(r, d)) << r << " " << d;
    }
}
