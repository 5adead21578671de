#pragma once

#include <cstdint>
#include <string_view>

#include "towerlab/ntheory.hpp"

namespace towerlab {

/// Primes p1 = p2 = 1 (mod 4), q = 3 (mod 4), pairwise distinct; the field is
/// Q(sqrt(2 p1 p2 q)).
struct PrimeTriple {
  OddPrime p1;
  OddPrime p2;
  OddPrime q;

  std::uint64_t d() const noexcept { return 2 * p1.value() * p2.value() * q.value(); }
  PrimeTriple swapped() const { return {p2, p1, q}; }
  friend bool operator==(const PrimeTriple&, const PrimeTriple&) = default;
};

/// Validates primality, congruences and distinctness; throws InvalidTriple.
PrimeTriple make_triple(std::uint64_t p1, std::uint64_t p2, std::uint64_t q);

/// Which of the symbol-profile families the field falls in. TypeTwoTwo and
/// FourRankTwo have 4-rank 0 and 2; the rest have Cl_2(k) of type (2, 2^n), n >= 2.
enum class CaseTag { TypeTwoTwo, Case1, Case2, Case3, Case4, Metacyclic, FourRankTwo };

std::string_view to_string(CaseTag tag) noexcept;

}  // namespace towerlab
