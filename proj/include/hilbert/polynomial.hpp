#pragma once

// Exact rational polynomials, the alternating binomial basis used for
// Hilbert polynomials, and the integer-valuedness screen.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hilbert/integer.hpp"
#include "hilbert/macaulay.hpp"

namespace hilbert {

/// Polynomial in one variable X with rational coefficients, stored in
/// ascending powers. Trailing zeros are always trimmed, so the zero
/// polynomial has an empty coefficient list.
class RationalPolynomial {
public:
  RationalPolynomial() = default;

  explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static RationalPolynomial constant(const Rational& c) { return RationalPolynomial({c}); }

  static RationalPolynomial x() { return RationalPolynomial({Rational(0), Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const
  {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Rational operator()(const BigInt& x) const { return (*this)(Rational(x)); }
  Rational operator()(long x) const { return (*this)(Rational(x)); }

  /// P(X + a).
  RationalPolynomial shifted(const Rational& a) const
  {
    RationalPolynomial acc;
    const RationalPolynomial lin({a, Rational(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  RationalPolynomial& operator+=(const RationalPolynomial& o)
  {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  RationalPolynomial& operator-=(const RationalPolynomial& o) { return *this += o * Rational(-1); }

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }

  friend RationalPolynomial operator*(const RationalPolynomial& a, const Rational& s)
  {
    std::vector<Rational> out(a.coeffs_);
    for (auto& c : out) c *= s;
    return RationalPolynomial(std::move(out));
  }

  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b)
  {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
  }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  std::string str() const
  {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      const Rational& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      const bool unit = mag == 1;
      if (!unit || i == 0) os << to_string(mag);
      if (i >= 1) os << (unit ? "" : "*") << "X";
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

private:
  void trim()
  {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// binom(X + a, k) as a polynomial in X.
inline RationalPolynomial binomial_polynomial(const BigInt& a, std::uint64_t k)
{
  RationalPolynomial acc = RationalPolynomial::constant(1);
  for (std::uint64_t t = 0; t < k; ++t)
    acc = acc * RationalPolynomial({Rational(a - t), Rational(1)}) * Rational(1, t + 1);
  return acc;
}

/// P(X) - P(X - 1).
inline RationalPolynomial delta(const RationalPolynomial& p) { return p - p.shifted(Rational(-1)); }

/// Normalized Hilbert-Samuel coefficients e_0..e_{d-1}: the polynomial
///   sum_i (-1)^i e_i binom(X + d - 1 - i, d - 1 - i),
/// of degree d - 1. An empty vector stands for the zero polynomial.
struct IntValuedPolynomial {
  std::vector<BigInt> e;

  std::size_t d() const { return e.size(); }

  friend bool operator==(const IntValuedPolynomial&, const IntValuedPolynomial&) = default;
};

inline RationalPolynomial to_polynomial(const IntValuedPolynomial& ev)
{
  RationalPolynomial acc;
  const std::size_t d = ev.d();
  for (std::size_t i = 0; i < d; ++i) {
    const std::uint64_t k = d - 1 - i;
    const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
    acc += binomial_polynomial(BigInt(k), k) * (sign * Rational(ev.e[i]));
  }
  return acc;
}

inline BigInt factorial(std::uint64_t n)
{
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

enum class IntegralityKind {
  accepted,
  zero,
  nonpositive_leading,
  leading_not_multiple,
  nonintegral_value,
};

struct IntegralityVerdict {
  IntegralityKind kind = IntegralityKind::accepted;
  /// For nonintegral_value: the i with P(-i) not an integer.
  std::optional<std::uint64_t> failing_point;
  std::string reason;

  bool accepted() const { return kind == IntegralityKind::accepted; }
};

/// Decides membership in Q[X; N]: the leading coefficient is a positive
/// multiple of 1/c! and P(-1), ..., P(-c) are integers (c = deg P).
inline IntegralityVerdict integer_valued_test(const RationalPolynomial& p)
{
  if (p.is_zero()) return {IntegralityKind::zero, std::nullopt, "zero polynomial"};
  if (p.leading() <= 0)
    return {IntegralityKind::nonpositive_leading, std::nullopt, "leading coefficient not positive"};
  const auto c = static_cast<std::uint64_t>(p.degree());
  if (!is_integral(p.leading() * Rational(factorial(c))))
    return {IntegralityKind::leading_not_multiple, std::nullopt,
            "leading coefficient not a multiple of 1/" + std::to_string(c) + "!"};
  for (std::uint64_t i = 1; i <= c; ++i) {
    if (!is_integral(p(Rational(-BigInt(i)))))
      return {IntegralityKind::nonintegral_value, i, "P(-" + std::to_string(i) + ") not integer"};
  }
  return {IntegralityKind::accepted, std::nullopt, {}};
}

/// Solves the Pascal-triangle system
///   sum_{k<=i} binom(i, k) e_{c-k} = (-1)^c P(-i-1),   0 <= i < c,
/// with e_0 = c! * leading coefficient. Throws std::domain_error when P is
/// not integer-valued.
inline IntValuedPolynomial hilbert_samuel_coeffs(const RationalPolynomial& p)
{
  const auto verdict = integer_valued_test(p);
  if (verdict.kind == IntegralityKind::zero) return {};
  if (!verdict.accepted())
    throw std::domain_error("not integer-valued: " + verdict.reason);

  const auto c = static_cast<std::uint64_t>(p.degree());
  std::vector<BigInt> e(c + 1);
  e[0] = to_integer(p.leading() * Rational(factorial(c)));
  const int sign = (c % 2 == 0) ? 1 : -1;

  // Row i of the system is the i-th Pascal row; rows are built by
  // shift-and-add so no binomial is recomputed.
  std::vector<BigInt> row{1};
  for (std::uint64_t i = 0; i < c; ++i) {
    if (i > 0) {
      std::vector<BigInt> next(row.size() + 1, 0);
      for (std::size_t k = 0; k < row.size(); ++k) {
        next[k] += row[k];
        next[k + 1] += row[k];
      }
      row = std::move(next);
    }
    if (row.back() != 1) throw std::logic_error("Pascal system lost its unit diagonal");
    BigInt rhs = to_integer(p(Rational(-BigInt(i) - 1))) * sign;
    for (std::uint64_t k = 0; k < i; ++k) rhs -= row[k] * e[c - k];
    e[c - i] = rhs;
  }

  // Independent route for e_0: alternating sum of the e_i equals P(0).
  BigInt alt = 0;
  for (std::uint64_t i = 1; i <= c; ++i) alt += (i % 2 == 0 ? 1 : -1) * e[i];
  if (to_integer(p(Rational(0))) - alt != e[0])
    throw std::logic_error("e_0 cross-check against P(0) failed");
  return {std::move(e)};
}

} // namespace hilbert
