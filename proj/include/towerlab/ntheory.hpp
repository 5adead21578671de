#pragma once

// Integer primitives and residue symbols shared by every other module.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace towerlab {

using Int = mpz_class;

/// A value in {+1, -1}.
enum class Sign : int { Minus = -1, Plus = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return to_int(a) == to_int(b) ? Sign::Plus : Sign::Minus;
}
constexpr Sign operator-(Sign a) noexcept { return a == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// Converts +1/-1 to a Sign; anything else throws InvalidArgument.
Sign sign_from_int(int v);

/// An odd prime certified by is_prime at construction.
class OddPrime {
 public:
  explicit OddPrime(std::uint64_t p);
  std::uint64_t value() const noexcept { return p_; }
  operator std::uint64_t() const noexcept { return p_; }
  friend bool operator==(const OddPrime&, const OddPrime&) = default;
  friend auto operator<=>(const OddPrime&, const OddPrime&) = default;

 private:
  std::uint64_t p_;
};

/// Deterministic for every 64-bit input (Miller-Rabin with the first twelve
/// prime bases).
bool is_prime(std::uint64_t n);

/// Deterministic below 2^64, otherwise a fixed 40-round probable-prime test.
bool is_prime(const Int& n);

/// Euler's criterion a^((p-1)/2) mod p mapped to {-1, 0, +1}.
int legendre_symbol(const Int& a, const OddPrime& p);

/// Kronecker symbol (a/n) for any nonzero n; binary reciprocity algorithm.
int kronecker_symbol(const Int& a, const Int& n);

/// (a/p)_4 = a^((p-1)/4) mod p. Requires p = 1 (mod 4) and (a/p) = +1,
/// otherwise throws UndefinedQuarticSymbol.
Sign quartic_symbol(const Int& a, const OddPrime& p);

Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);
/// Square root of n when n is a perfect square.
std::optional<Int> exact_sqrt(const Int& n);

/// Trial-division factorisation, ascending primes with multiplicities.
std::vector<std::pair<std::uint64_t, int>> factor_small(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

/// Primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Non-negative residue of a modulo m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace towerlab
