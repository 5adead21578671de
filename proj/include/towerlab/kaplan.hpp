#pragma once

// Kaplan's representation data for (p1, q), the alpha symbol, and the full
// residue-symbol profile of a triple.

#include <cstdint>
#include <optional>

#include "towerlab/ntheory.hpp"
#include "towerlab/triple.hpp"

namespace towerlab {

/// p1 = 2e^2 + (-1)^gamma d^2, q = 2r^2 + (-1)^gamma s^2 with (2/q) = (-1)^(gamma+1),
/// and A = s d + 2 e r + 2 gamma (e s + d r).
struct KaplanData {
  int gamma = 0;
  std::uint64_t e = 0;
  std::uint64_t d = 0;
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::int64_t A = 0;
};

struct SymbolProfile {
  Sign leg_2p1 = Sign::Plus;   // (2/p1)
  Sign leg_2p2 = Sign::Plus;   // (2/p2)
  Sign leg_p1p2 = Sign::Plus;  // (p1/p2) = (p2/p1)
  Sign leg_qp1 = Sign::Plus;   // (q/p1)
  Sign leg_qp2 = Sign::Plus;   // (q/p2)
  std::optional<Sign> t1;      // (p1/p2)_4
  std::optional<Sign> t2;      // (p2/p1)_4
  std::optional<Sign> s4;      // (2q/p1)_4
  std::optional<Sign> alpha;   // (A/p1)

  /// The same field with the roles of p1 and p2 exchanged; only the
  /// Legendre part and t1/t2 carry over, s4 and alpha are dropped.
  SymbolProfile legendre_swapped() const;
};

/// Smallest-e representation of p1 and smallest-r representation of q.
/// Requires p1 = 1 (mod 8) and q = 3 (mod 4); throws NoRepresentation.
KaplanData decompose(const OddPrime& p1, const OddPrime& q);

/// (A/p1). Throws ConventionMismatch if p1 divides A.
Sign alpha_symbol(const OddPrime& p1, const OddPrime& q);

SymbolProfile symbol_profile(const OddPrime& p1, const OddPrime& p2, const OddPrime& q);
inline SymbolProfile symbol_profile(const PrimeTriple& t) { return symbol_profile(t.p1, t.p2, t.q); }

/// Kaplan's criterion: with (2/p1) = (q/p1) = 1, h_2(2 p1 q) = 4 iff
/// (A/p1) = -1 or (2q/p1)_4 = -1.
bool h2_2pq_is_4(const OddPrime& p1, const OddPrime& q);

}  // namespace towerlab
