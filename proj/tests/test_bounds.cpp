#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace hilbert;
using hilbert::testing::poly;
using hilbert::testing::random_development;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs)
{
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

ArtinianDevelopment random_artinian(std::mt19937_64& rng)
{
  ArtinianDevelopment dev;
  dev.b = std::uniform_int_distribution<std::uint64_t>(1, 6)(rng);
  dev.q = std::uniform_int_distribution<long>(0, 6)(rng);
  if (dev.b >= 2 && std::uniform_int_distribution<int>(0, 4)(rng) > 0) dev.tail = random_development(rng, dev.b - 2, 10);
  return dev;
}

} // namespace

TEST(ArtinianDevelopment, Examples)
{
  const auto a = artinian_development(poly({5, 3}), 2, 5);
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(a.dev->q, 3);
  EXPECT_EQ(a.dev->tail.coefficients(), (std::vector<std::uint64_t>{0, 0}));
  EXPECT_EQ(a.dev->p(), 2);

  const auto b = artinian_development(poly({4, 4}), 2, 4);
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(b.dev->q, 4);
  EXPECT_TRUE(b.dev->tail.empty());

  const auto c = artinian_development(poly({0, 3, 1}), 4, 1);
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c.dev->q, 0);
  EXPECT_EQ(c.dev->tail.coefficients(), (std::vector<std::uint64_t>{2, 2, 1}));

  EXPECT_FALSE(artinian_development(poly({4, 4}), 2, 3).ok());
  EXPECT_FALSE(artinian_development(poly({0, 3, 1}), 2, 5).ok());
  EXPECT_FALSE(artinian_development(poly({-5, 5, 1}), 3, 5).ok());
}

TEST(ArtinianDevelopment, PolynomialRoundTrip)
{
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const auto dev = random_artinian(rng);
    const auto back = artinian_development(dev.polynomial(), dev.b, dev.q + 1);
    if (dev.q == 0 && dev.tail.empty()) continue;
    ASSERT_TRUE(back.ok()) << back.reason;
    ASSERT_EQ(back.dev->polynomial(), dev.polynomial());
  }
}

TEST(VanishingBounds, Examples)
{
  const auto rows = vanishing_bounds(GotzmannDevelopment::from_coefficients({2, 2, 1}));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].n_ge, 2);
  EXPECT_EQ(rows[1].n_ge, 1);
  EXPECT_EQ(rows[2].n_ge, -1);
  EXPECT_TRUE(rows[2].vacuous);
  EXPECT_FALSE(rows[0].vacuous);

  const auto art = vanishing_bounds(ArtinianDevelopment{4, 2, {}});
  ASSERT_EQ(art.size(), 2u);
  for (const auto& row : art) EXPECT_EQ(row.n_ge, BigInt(1) - BigInt(row.i));

  for (long e0 = 1; e0 <= 6; ++e0) {
    const auto one = vanishing_bounds(*solve_development({ints({e0})}).dev);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].a_le, e0 - 2);
  }
}

TEST(RegularityIndexBound, Examples)
{
  EXPECT_EQ(regularity_index_bound(ArtinianDevelopment{4, 2, {}}, MinusInfinity{}).value, 0);
  const ArtinianDevelopment field{0, 4, GotzmannDevelopment::from_coefficients({2, 2, 1})};
  EXPECT_EQ(regularity_index_bound(field, MinusInfinity{}).value, 2);
  const ArtinianDevelopment three{1, 4, GotzmannDevelopment::from_coefficients({0, 0, 0})};
  EXPECT_EQ(regularity_index_bound(three, BigInt(5)).value, 6);
  const auto unknown = regularity_index_bound(three, Unknown{});
  EXPECT_FALSE(unknown.value);
  EXPECT_EQ(unknown.expression, "max(a0 + 1, 3)");
}

TEST(RegularityIndexBound, Example55SaturationDegree)
{
  // a_0 is the largest degree where I and its saturation differ.
  const auto I = efec(hilbert::testing::example_55(), 4, hilbert::testing::series(1));
  const auto J = saturate(I);
  const auto hi = staircase_hilbert(I, 8), hj = staircase_hilbert(J, 8);
  long a0 = -1;
  for (long n = 0; n <= 8; ++n)
    if (hi[n] != hj[n]) a0 = n;
  EXPECT_EQ(a0, 3);
  const auto dev = artinian_development(poly({0, 3, 1}), 4, 1);
  EXPECT_EQ(regularity_index_bound(*dev.dev, BigInt(a0)).value, 4);
  EXPECT_EQ(regularity_index(hilbert::testing::example_55()), 4u);
}

TEST(Mumford, Examples)
{
  const auto a = mumford_regularity(4, ints({1, -1, 1, 1}));
  EXPECT_EQ(a.difference, poly({0, 3, 1}));
  EXPECT_EQ(a.s, 3);
  const auto b = mumford_regularity(4, ints({1, 1, 3, 1}));
  EXPECT_EQ(b.difference, poly({0, 2}));
  EXPECT_FALSE(b.ok());
  EXPECT_EQ(mumford_regularity(2, ints({0, 1})).s, 1);
  EXPECT_THROW(mumford_regularity(2, ints({0})), std::invalid_argument);
}

TEST(Mumford, AgreesWithGotztst)
{
  std::mt19937_64 rng(43);
  int successes = 0;
  for (int t = 0; t < 400; ++t) {
    const std::uint64_t b = std::uniform_int_distribution<std::uint64_t>(1, 5)(rng);
    std::vector<BigInt> a(b);
    for (auto& x : a) x = std::uniform_int_distribution<long>(-3, 3)(rng);
    const auto res = mumford_regularity(b, a);
    const auto t2 = gotztst(res.difference);
    ASSERT_EQ(res.ok(), t2.admissible());
    if (res.ok()) {
      ASSERT_EQ(*res.s, t2.dev->length());
      ++successes;
    }
  }
  EXPECT_GT(successes, 0);
}

TEST(EInequalities, Examples)
{
  const auto a = e_inequalities({ints({2, 0, -2})});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].lhs, 0);
  EXPECT_EQ(a[0].f, -1);
  EXPECT_TRUE(*a[0].holds);
  EXPECT_TRUE(*a[1].holds);

  const auto b = e_inequalities({ints({2, 2})});
  ASSERT_EQ(b.size(), 1u);
  EXPECT_FALSE(*b[0].holds);

  for (const auto& row : e_inequalities({ints({1, 0, 0, 0})})) EXPECT_TRUE(row.holds.value_or(false));
  const auto c = e_inequalities({ints({2, 2, 0})});
  EXPECT_FALSE(*c[0].holds);
  EXPECT_EQ(c[1].note, "prefix not developable");
}

TEST(EInequalities, HoldForDevelopableVectors)
{
  std::mt19937_64 rng(47);
  for (int t = 0; t < 300; ++t) {
    const auto ev = development_to_e(random_development(rng, 5, 60));
    for (const auto& row : e_inequalities(ev)) ASSERT_TRUE(row.holds.value_or(false));
  }
}

TEST(EInequalities, FailureMatchesSolver)
{
  std::mt19937_64 rng(53);
  for (int t = 0; t < 300; ++t) {
    IntValuedPolynomial ev;
    ev.e.push_back(std::uniform_int_distribution<long>(1, 6)(rng));
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 1; i < d; ++i) ev.e.push_back(std::uniform_int_distribution<long>(-15, 15)(rng));
    bool all = true;
    for (const auto& row : e_inequalities(ev)) all = all && row.holds.value_or(false);
    ASSERT_EQ(all, solve_development(ev).ok());
  }
}

TEST(CompareDevelopments, Examples)
{
  const auto a = compare_developments(ArtinianDevelopment{1, 2, {}});
  EXPECT_EQ(a.p_counts, ints({0, 0}));
  EXPECT_EQ(a.s_counts, ints({1, 1}));
  EXPECT_TRUE(a.holds);

  const auto b = compare_developments(ArtinianDevelopment{4, 2, {}});
  EXPECT_EQ(b.s_counts, ints({10, 4}));
  EXPECT_TRUE(b.holds);

  const ArtinianDevelopment field{0, 4, GotzmannDevelopment::from_coefficients({2, 2, 1})};
  const auto c = compare_developments(field);
  EXPECT_EQ(c.p_counts, c.s_counts);
}

TEST(CompareDevelopments, RandomArtinianDevelopments)
{
  std::mt19937_64 rng(59);
  for (int t = 0; t < 300; ++t) {
    const auto dev = random_artinian(rng);
    ASSERT_TRUE(compare_developments(dev).holds);
  }
}

TEST(LowerBoundFunction, Examples)
{
  const auto dev = GotzmannDevelopment::from_coefficients({2, 2, 1});
  EXPECT_EQ(lower_bound_function(dev, 0, 2), 10);
  for (std::uint64_t e0 = 1; e0 <= 6; ++e0) {
    const auto ones = GotzmannDevelopment::from_coefficients(std::vector<std::uint64_t>(e0, 0));
    for (long n = 0; n <= 10; ++n) EXPECT_EQ(lower_bound_function(ones, 0, n), std::min<long>(n + 1, e0));
  }
  std::mt19937_64 rng(61);
  for (int t = 0; t < 100; ++t) {
    const auto d = random_development(rng, 4, 20);
    const auto c = d.coefficients();
    if (c.size() >= 2) {
      ASSERT_EQ(lower_bound_function(d, 0, 1), BigInt(c[0] + 2));
    }
  }
}
