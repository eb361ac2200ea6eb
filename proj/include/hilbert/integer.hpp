#pragma once

// Exact integer and rational types shared by every module.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

/// Converts an integral rational; throws std::domain_error otherwise.
inline BigInt to_integer(const Rational& q)
{
  if (!is_integral(q))
    throw std::domain_error("value " + q.str() + " is not an integer");
  return numerator_of(q);
}

/// Narrowing conversion for counts that must index memory (degrees, ranks,
/// variable counts). Throws std::overflow_error when out of range.
template <typename T = std::uint64_t>
T to_machine(const BigInt& v, const char* what = "value")
{
  if (v < 0 || v > BigInt(std::numeric_limits<T>::max()))
    throw std::overflow_error(std::string(what) + " " + v.str() + " out of machine range");
  return static_cast<T>(v);
}

/// Least integer >= a / b for b > 0.
inline BigInt ceil_div(const BigInt& a, const BigInt& b)
{
  BigInt q = a / b;
  if (q * b < a) ++q;
  return q;
}

inline BigInt parse_integer(const std::string& text)
{
  if (text.empty())
    throw std::invalid_argument("empty integer literal");
  try {
    return BigInt(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed integer literal '" + text + "'");
  }
}

/// Parses "p" or "p/q" (optionally signed) into a reduced fraction.
inline Rational parse_rational(const std::string& text)
{
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

inline std::string to_string(const Rational& q)
{
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

} // namespace hilbert
