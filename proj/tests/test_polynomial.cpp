#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace hilbert;
using hilbert::testing::poly;

namespace {

// h(n) = sum_i (-1)^i e_i binom(n + d - 1 - i, d - 1 - i), evaluated termwise.
BigInt e_basis_value(const IntValuedPolynomial& ev, long n)
{
  BigInt acc = 0;
  const long d = static_cast<long>(ev.d());
  for (long i = 0; i < d; ++i) {
    const BigInt term = ev.e[i] * binom_poly(n + d - 1 - i, static_cast<std::uint64_t>(d - 1 - i));
    acc += (i % 2 == 0) ? term : BigInt(-term);
  }
  return acc;
}

} // namespace

TEST(RationalPolynomial, Evaluation)
{
  const auto h = poly({0, 3, 1});
  EXPECT_EQ(h(-1L), -2);
  EXPECT_EQ(h(-2L), -2);
  EXPECT_EQ(RationalPolynomial{}(7L), 0);
  EXPECT_EQ(poly({-5, 5, 1})(-2L), -11);
}

TEST(RationalPolynomial, ArithmeticAndFormatting)
{
  const auto p = poly({1, 2});
  const auto q = poly({-1, 0, 3});
  EXPECT_EQ((p * q).str(), "6*X^3 + 3*X^2 - 2*X - 1");
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ((p + q).str(), "3*X^2 + 2*X");
  EXPECT_EQ(poly({0, 1}).shifted(Rational(2)), poly({2, 1}));
  EXPECT_EQ(RationalPolynomial({Rational(1, 2), Rational(0)}).str(), "1/2");
  EXPECT_EQ(RationalPolynomial({Rational(0), Rational(-1, 3)}).str(), "-1/3*X");
}

TEST(Delta, Examples)
{
  EXPECT_EQ(delta(poly({0, 3, 1})), poly({2, 2}));
  EXPECT_TRUE(delta(poly({7})).is_zero());
  EXPECT_EQ(delta(poly({1, 1})), poly({1}));
  for (std::uint64_t i = 1; i < 6; ++i)
    EXPECT_EQ(delta(binomial_polynomial(BigInt(i), i)), binomial_polynomial(BigInt(i - 1), i - 1));
}

TEST(Delta, TruncatesTheEVector)
{
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-10000, 10000);
  for (int t = 0; t < 200; ++t) {
    IntValuedPolynomial ev;
    const int d = 2 + t % 6;
    ev.e.push_back(std::uniform_int_distribution<long>(1, 10000)(rng));
    for (int i = 1; i < d; ++i) ev.e.push_back(coef(rng));
    auto truncated = ev;
    truncated.e.pop_back();
    EXPECT_EQ(delta(to_polynomial(ev)), to_polynomial(truncated));
  }
}

TEST(IntegerValued, Examples)
{
  EXPECT_TRUE(integer_valued_test(poly({0, 3, 1})).accepted());
  const auto half = integer_valued_test(RationalPolynomial({Rational(0), Rational(1, 2)}));
  EXPECT_EQ(half.kind, IntegralityKind::leading_not_multiple);
  EXPECT_TRUE(integer_valued_test(RationalPolynomial({Rational(0), Rational(1, 2), Rational(1, 2)})).accepted());
  EXPECT_EQ(integer_valued_test({}).kind, IntegralityKind::zero);
  EXPECT_EQ(integer_valued_test(poly({0, -1})).kind, IntegralityKind::nonpositive_leading);
  const auto shifted = integer_valued_test(RationalPolynomial({Rational(1, 2), Rational(1)}));
  EXPECT_EQ(shifted.kind, IntegralityKind::nonintegral_value);
  EXPECT_EQ(shifted.failing_point, 1u);
}

TEST(IntegerValued, AgreesWithValuesOnARange)
{
  // binom(X + a, k) / m is integer-valued exactly when m divides every value.
  for (std::uint64_t k = 1; k <= 4; ++k)
    for (long m = 1; m <= 4; ++m) {
      const auto p = binomial_polynomial(0, k) * Rational(1, m) + binomial_polynomial(BigInt(k), k);
      bool integral = true;
      for (long n = -10; n <= 10; ++n) integral = integral && is_integral(p(n));
      EXPECT_EQ(integer_valued_test(p).accepted(), integral) << p.str();
    }
}

TEST(HilbertSamuel, Examples)
{
  EXPECT_EQ(hilbert_samuel_coeffs(poly({0, 3, 1})).e, (std::vector<BigInt>{2, 0, -2}));
  EXPECT_EQ(hilbert_samuel_coeffs(poly({-5, 5, 1})).e, (std::vector<BigInt>{2, -2, -9}));
  EXPECT_EQ(hilbert_samuel_coeffs(poly({5, 3})).e, (std::vector<BigInt>{3, -2}));
  EXPECT_TRUE(hilbert_samuel_coeffs({}).e.empty());
  EXPECT_THROW(hilbert_samuel_coeffs(poly({0, 2, 1}) * Rational(1, 3)), std::domain_error);
}

TEST(HilbertSamuel, RoundTripAndTermwiseOracle)
{
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-10000, 10000);
  for (int t = 0; t < 500; ++t) {
    IntValuedPolynomial ev;
    const int d = 1 + t % 8;
    ev.e.push_back(std::uniform_int_distribution<long>(1, 10000)(rng));
    for (int i = 1; i < d; ++i) ev.e.push_back(coef(rng));
    const auto p = to_polynomial(ev);
    for (long n = -8; n <= 8; ++n) ASSERT_EQ(p(n), Rational(e_basis_value(ev, n)));
    ASSERT_EQ(hilbert_samuel_coeffs(p), ev);
  }
}
