#pragma once

// Admissibility of Hilbert functions H = (r; i_1, ..., i_{n0}; h(X)) over an
// Artinian base of length r, and of Hilbert polynomials, for a given number
// of variables b.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hilbert/gotzmann.hpp"
#include "hilbert/integer.hpp"
#include "hilbert/macaulay.hpp"
#include "hilbert/polynomial.hpp"

namespace hilbert {

/// H(0) = r, H(n) = prefix[n-1] for 1 <= n <= n0, H(n) = tail(n) beyond.
struct HilbertFunctionSpec {
  BigInt r = 1;
  std::vector<BigInt> prefix;
  RationalPolynomial tail;

  std::uint64_t n0() const { return prefix.size(); }

  Rational exact_value(std::uint64_t n) const
  {
    if (n == 0) return Rational(r);
    if (n <= prefix.size()) return Rational(prefix[n - 1]);
    return tail(Rational(BigInt(n)));
  }

  /// Throws std::domain_error if the tail is not integral at n.
  BigInt value(std::uint64_t n) const { return to_integer(exact_value(n)); }

  friend bool operator==(const HilbertFunctionSpec&, const HilbertFunctionSpec&) = default;
};

/// Drops trailing prefix entries that already agree with the tail.
inline HilbertFunctionSpec normalize(HilbertFunctionSpec h)
{
  while (!h.prefix.empty() && Rational(h.prefix.back()) == h.tail(Rational(BigInt(h.prefix.size()))))
    h.prefix.pop_back();
  return h;
}

/// Least k with H(n) = h(n) for all n >= k.
inline std::uint64_t regularity_index(const HilbertFunctionSpec& spec)
{
  const auto h = normalize(spec);
  if (!h.prefix.empty()) return h.n0() + 1;
  return Rational(h.r) == h.tail(Rational(0)) ? 0 : 1;
}

struct GrowthVerdict {
  bool ok = true;
  /// Degree n whose transition n -> n + 1 broke the bound.
  std::optional<std::uint64_t> violation;
  std::string reason;
};

/// H(n + 1) <= (H(n)_n)_+^dagger for 1 <= n < up_to.
inline GrowthVerdict macaulay_check(const HilbertFunctionSpec& h, std::uint64_t up_to)
{
  if (h.r < 1) return {false, 0, "H(0) = r must be positive"};
  for (std::uint64_t n = 1; n <= up_to; ++n) {
    const Rational v = h.exact_value(n);
    if (!is_integral(v) || v < 0)
      return {false, n - 1, "H(" + std::to_string(n) + ") = " + to_string(v) + " is not a natural number"};
  }
  for (std::uint64_t n = 1; n < up_to; ++n) {
    const BigInt bound = up_both(h.value(n), n);
    const BigInt next = h.value(n + 1);
    if (next > bound)
      return {false, n,
              "H(" + std::to_string(n + 1) + ") = " + next.str() + " > " + bound.str() + " = (H(" +
                  std::to_string(n) + ")_" + std::to_string(n) + ")_+^+"};
  }
  return {};
}

/// H(n) = binom(n + b - 1, b - 1) * q + rem, 0 <= rem < binom(n + b - 1, b - 1).
struct DivisionPair {
  BigInt q;
  BigInt rem;

  friend bool operator==(const DivisionPair&, const DivisionPair&) = default;
};

inline DivisionPair divide_value(const BigInt& value, std::uint64_t n, std::uint64_t b)
{
  if (b == 0) throw std::invalid_argument("number of variables must be positive");
  if (value < 0) throw std::domain_error("cannot divide a negative Hilbert function value");
  const BigInt slots = binom(BigInt(n + b - 1), BigInt(b - 1));
  return {value / slots, value % slots};
}

inline DivisionPair euclid_division(const HilbertFunctionSpec& h, std::uint64_t n, std::uint64_t b)
{
  return divide_value(h.value(n), n, b);
}

namespace detail {

inline bool lex_le(const DivisionPair& a, const DivisionPair& b)
{
  return a.q < b.q || (a.q == b.q && a.rem <= b.rem);
}

inline std::string pair_str(const DivisionPair& p) { return "(" + p.q.str() + ", " + p.rem.str() + ")"; }

} // namespace detail

/// Embedding-dimension-aware growth: for 1 <= n <= up_to,
///   (q(n), r(n)) <= (q(n-1), (r(n-1)_{n-1})_+^+)
/// lexicographically, with (q(0), r(0)) = (r, 0).
inline GrowthVerdict b_growth_check(const HilbertFunctionSpec& h, std::uint64_t b, std::uint64_t up_to)
{
  if (b == 0) throw std::invalid_argument("number of variables must be positive");
  if (h.r < 1) return {false, 0, "H(0) = r must be positive"};
  DivisionPair prev{h.r, 0};
  for (std::uint64_t n = 1; n <= up_to; ++n) {
    const Rational v = h.exact_value(n);
    if (!is_integral(v) || v < 0)
      return {false, n - 1, "H(" + std::to_string(n) + ") = " + to_string(v) + " is not a natural number"};
    const DivisionPair cur = divide_value(numerator_of(v), n, b);
    const DivisionPair bound{prev.q, up_both(prev.rem, n - 1)};
    if (!detail::lex_le(cur, bound))
      return {false, n - 1,
              "(q(" + std::to_string(n) + "), r(" + std::to_string(n) + ")) = " + detail::pair_str(cur) + " > " +
                  detail::pair_str(bound)};
    prev = cur;
  }
  return {};
}

struct PolyAdmissibility {
  bool admissible = false;
  /// Governing clause of the polynomial characterisation: "(i)", "(ii)",
  /// "(iii)(a)", "(iii)(b)", "(iii)" or "zero".
  std::string clause;
  std::string reason;
};

/// Whether P is the Hilbert polynomial of a quotient of R_0[X_1..X_b] with
/// length(R_0) = r.
inline PolyAdmissibility poly_b_admissible(const RationalPolynomial& p, std::uint64_t b, const BigInt& r)
{
  if (b == 0) throw std::invalid_argument("number of variables must be positive");
  if (p.is_zero()) return {true, "zero", "zero polynomial is realised by Artinian quotients"};
  const auto test = gotztst(p);
  if (test.rejected_at_step == 1) return {false, "(i)", "not integer-valued: " + test.reason};
  const auto c = static_cast<std::uint64_t>(p.degree());
  if (b < c + 1) return {false, "(i)", "b = " + std::to_string(b) + " < deg(P) + 1 = " + std::to_string(c + 1)};
  if (!test.admissible()) return {false, "(i)", test.reason};
  if (b >= c + 2) return {true, "(ii)", "b >= deg(P) + 2 and P has a Gotzmann development"};

  const auto dec = gamma_decompose(p);
  if (dec.gamma == r && dec.remainder.is_zero()) return {true, "(iii)(b)", "gamma(P) = r and Gamma_P = 0"};
  if (dec.gamma > 0 && dec.gamma < r) {
    if (gotztst(dec.remainder).admissible())
      return {true, "(iii)(a)", "0 < gamma(P) < r and Gamma_P has a Gotzmann development"};
    return {false, "(iii)", "Gamma_P = " + dec.remainder.str() + " has no Gotzmann development"};
  }
  return {false, "(iii)", "gamma(P) = " + dec.gamma.str() + " with Gamma_P = " + dec.remainder.str() + " and r = " +
                              r.str()};
}

struct TraceEntry {
  std::string step;
  std::string detail;
};

struct BadmReport {
  bool admissible = false;
  std::optional<std::uint64_t> b_min;
  std::string reason;
  std::vector<TraceEntry> trace;

  HilbertFunctionSpec normalized;
  std::optional<IntValuedPolynomial> e;
  std::optional<GammaDecomposition> gamma;
  std::optional<GotzmannDevelopment> gamma_dev;  // development of Gamma_h
  std::optional<GotzmannDevelopment> tail_dev;   // development of h
  std::optional<BigInt> p_gamma;
  std::optional<BigInt> p_tail;
  BigInt p = 0;
  std::optional<std::uint64_t> regularity_index;
  std::optional<std::uint64_t> m;
};

/// Decides admissibility of H and the least b for which it is b-admissible.
inline BadmReport badm(const HilbertFunctionSpec& spec)
{
  if (spec.r < 1) throw std::invalid_argument("r = length(R_0) must be positive");
  BadmReport rep;
  rep.normalized = spec;
  auto log = [&rep](std::string step, std::string detail) {
    rep.trace.push_back({std::move(step), std::move(detail)});
  };
  auto reject = [&](std::string step, std::string why) {
    log(std::move(step), "not admissible: " + why);
    rep.reason = std::move(why);
    return rep;
  };

  for (std::size_t i = 0; i < spec.prefix.size(); ++i)
    if (spec.prefix[i] < 0)
      return reject("input", "H(" + std::to_string(i + 1) + ") = " + spec.prefix[i].str() + " is negative");

  const RationalPolynomial& h = spec.tail;
  const Rational h1_exact = spec.exact_value(1);
  const bool polynomial_part = !h.is_zero();
  std::uint64_t c = 0;
  std::uint64_t b_min = 1;

  // Steps 1-6 compute b_min and p; the goto-style control flow of the
  // algorithm is expressed with these flags.
  bool go_step6 = false;
  bool go_step7 = false;

  if (!polynomial_part) {
    if (!is_integral(h1_exact) || h1_exact < 0) return reject("input", "H(1) is not a natural number");
    log("0", "tail is the zero polynomial: Artinian function, polynomial steps skipped, p = 0");
    b_min = std::max<std::uint64_t>(1, to_machine(ceil_div(numerator_of(h1_exact), spec.r), "b_min"));
    rep.p = 0;
    go_step7 = true;
  } else {
    c = static_cast<std::uint64_t>(h.degree());
    // Step 1
    if (h1_exact < Rational(BigInt(c + 1)))
      return reject("1", "H(1) = " + to_string(h1_exact) + " < deg(h) + 1 = " + std::to_string(c + 1));
    log("1", "c = deg(h) = " + std::to_string(c) + ", H(1) = " + to_string(h1_exact) + " >= c + 1");
    const BigInt h1 = to_integer(h1_exact);

    // Step 2
    const auto integrality = integer_valued_test(h);
    if (!integrality.accepted()) return reject("2", "h is not integer-valued: " + integrality.reason);
    rep.e = hilbert_samuel_coeffs(h);
    {
      std::ostringstream os;
      os << "h in Q[X;N], e = (";
      for (std::size_t i = 0; i < rep.e->e.size(); ++i) os << (i ? ", " : "") << rep.e->e[i];
      os << ")";
      log("2", os.str());
    }
    const BigInt& e0 = rep.e->e[0];

    // Step 3
    b_min = std::max<std::uint64_t>(to_machine(ceil_div(h1, spec.r), "b_min"), c + 1);
    if (b_min > c + 1) {
      log("3", "b_min = " + std::to_string(b_min) + " > c + 1: (c+1)-admissibility test does not apply");
      go_step6 = true;
    } else {
      log("3", "b_min = c + 1 = " + std::to_string(b_min) + ": testing (c+1)-admissibility");
      // Step 4
      if (e0 > spec.r) {
        ++b_min;
        log("4", "e_0 = " + e0.str() + " > r: not (c+1)-admissible, b_min := " + std::to_string(b_min));
        go_step6 = true;
      } else {
        // Step 5
        const RationalPolynomial q = h - binomial_polynomial(BigInt(c), c) * Rational(e0);
        if (q.is_zero()) {
          rep.gamma = GammaDecomposition{e0, {}, false};
          rep.gamma_dev = GotzmannDevelopment{};
          rep.p_gamma = 0;
          rep.p = 0;
          log("5.1", "Q = 0: gamma(h) = e_0 = " + e0.str() + ", Gamma_h = 0, p = 0");
          go_step7 = true;
        } else if (q.leading() < 0) {
          ++b_min;
          log("5.2", "leading coefficient of Q = " + q.str() + " is negative: Gamma_h != Q, b_min := " +
                         std::to_string(b_min));
          go_step6 = true;
        } else if (e0 == spec.r) {
          ++b_min;
          log("5.3", "Q = " + q.str() + " > 0 with e_0 = r: b_min := " + std::to_string(b_min));
          go_step6 = true;
        } else {
          rep.gamma = GammaDecomposition{e0, q, false};
          auto gdev = solve_development(hilbert_samuel_coeffs(q));
          if (!gdev.ok()) {
            ++b_min;
            log("5.3", "Gamma_h = " + q.str() + " has no Gotzmann development, b_min := " + std::to_string(b_min));
            go_step6 = true;
          } else {
            rep.gamma_dev = gdev.dev;
            rep.p_gamma = gdev.dev->length();
            rep.p = *rep.p_gamma;
            log("5.3", "gamma(h) = " + e0.str() + ", Gamma_h = " + q.str() + " developable, p = " + rep.p.str());
            go_step7 = true;
          }
        }
      }
    }
  }

  auto step6 = [&]() -> bool {
    auto dev = solve_development(*rep.e);
    if (!dev.ok()) {
      rep.reason = "h has no Gotzmann development: " + dev.reason;
      log("6", "not admissible: " + rep.reason);
      return false;
    }
    rep.tail_dev = dev.dev;
    rep.p_tail = dev.dev->length();
    rep.p = *rep.p_tail;
    log("6", "h has a Gotzmann development of length p = " + rep.p.str());
    return true;
  };

  if (go_step6 && !step6()) return rep;
  (void)go_step7;

  // Step 7
  rep.normalized = normalize(spec);
  rep.regularity_index = regularity_index(rep.normalized);
  log("7", "i(H) = " + std::to_string(*rep.regularity_index) + " with n0 = " + std::to_string(rep.normalized.n0()));

  const BigInt h1 = rep.normalized.value(1);
  for (;;) {
    // Step 8
    const std::uint64_t m = std::max<std::uint64_t>(*rep.regularity_index, to_machine(rep.p, "p"));
    rep.m = m;
    const auto growth = b_growth_check(rep.normalized, b_min, std::max<std::uint64_t>(m, 1));
    if (growth.ok) {
      log("8", "m = " + std::to_string(m) + ", growth holds for b = " + std::to_string(b_min));
      rep.admissible = true;
      rep.b_min = b_min;
      return rep;
    }
    log("8", "m = " + std::to_string(m) + ", b = " + std::to_string(b_min) + " fails: " + growth.reason);
    if (polynomial_part && b_min == c + 1) {
      ++b_min;
      log("8.1", "b_min := " + std::to_string(b_min) + ", recompute p from the development of h");
      if (!step6()) return rep;
      continue;
    }
    if (BigInt(b_min) >= h1)
      return reject("8.2", "growth fails at b = " + std::to_string(b_min) + " >= H(1)");
    ++b_min;
    log("8.3", "b_min := " + std::to_string(b_min));
  }
}

} // namespace hilbert
