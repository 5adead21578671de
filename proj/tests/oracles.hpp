#pragma once

// Slow, independent reference implementations used only by the tests.
// None of them call into the library.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// (a/p) by listing the squares mod p.
inline int legendre_brute(std::int64_t a, std::uint64_t p) {
  const auto r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                            static_cast<std::int64_t>(p));
  if (r == 0) return 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

/// Whether x^4 = a (mod p) has a solution.
inline bool is_fourth_power_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  for (std::uint64_t x = 1; x < p; ++x) {
    const std::uint64_t x2 = x * x % p;
    if (x2 * x2 % p == a) return true;
  }
  return false;
}

/// Floor square root by Newton's iteration on integers.
inline mpz_class newton_isqrt(const mpz_class& n) {
  if (n < 2) return n;
  mpz_class x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

/// Smallest y in [1, y_max] with m y^2 + 1 a square, as (x, y).
inline std::optional<std::pair<mpz_class, mpz_class>> pell_brute(std::uint64_t m, std::uint64_t y_max) {
  for (std::uint64_t y = 1; y <= y_max; ++y) {
    const mpz_class v = mpz_class(static_cast<unsigned long>(m)) * y * y + 1;
    const mpz_class r = newton_isqrt(v);
    if (r * r == v) return std::make_pair(r, mpz_class(static_cast<unsigned long>(y)));
  }
  return std::nullopt;
}

/// Kronecker symbol (D/n) for n >= 1 from its definition: multiplicative
/// in n, (D/2) by D mod 8, (D/p) by squares mod p.
inline int kronecker_def(std::int64_t D, std::uint64_t n) {
  int out = 1;
  for (std::uint64_t p = 2; n > 1; ++p) {
    while (n % p == 0) {
      n /= p;
      if (p == 2) {
        const std::int64_t r = ((D % 8) + 8) % 8;
        if (r % 2 == 0) return 0;
        out *= (r == 1 || r == 7) ? 1 : -1;
      } else {
        out *= legendre_brute(D, p);
      }
    }
  }
  return out;
}

/// Wide class number h of the real quadratic field of discriminant D from
/// the analytic formula  2 h log(eps) = -sum_{a<D} (D/a) log sin(pi a / D),
/// with log(eps) supplied by the caller.
inline std::uint64_t analytic_class_number(std::int64_t D, long double log_eps) {
  long double sum = 0;
  for (std::int64_t a = 1; a < D; ++a) {
    const int chi = kronecker_def(D, static_cast<std::uint64_t>(a));
    if (chi != 0) sum += chi * std::log(std::sin(std::numbers::pi_v<long double> * a / D));
  }
  return static_cast<std::uint64_t>(std::llround(-sum / (2 * log_eps)));
}

/// Distinct prime factors by trial division.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool squarefree(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace oracle
