#pragma once

// Fundamental systems of units of the unramified biquadratic extensions
//   K1 = Q(sqrt(p1), sqrt(2 p2 q)), K2 = Q(sqrt(p2), sqrt(2 p1 q)), K3 = Q(sqrt(2q), sqrt(p1 p2))
// as symbolic descriptors, and the unit indices q1, q2, q3 they imply.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "towerlab/ntheory.hpp"
#include "towerlab/pell.hpp"
#include "towerlab/triple.hpp"

namespace towerlab {

/// Fundamental units of the quadratic subfields, by radicand.
enum class UnitToken { EpsP1, EpsP2, Eps2q, EpsP1P2, Eps2P1q, Eps2P2q, Eps2P1P2q };

std::string_view to_string(UnitToken t) noexcept;

/// A product of subfield units, optionally under a square root.
struct UnitGenerator {
  std::vector<UnitToken> factors;
  bool root = false;

  std::string to_string() const;
  friend bool operator==(const UnitGenerator&, const UnitGenerator&) = default;
};

struct FsuDescriptor {
  std::array<UnitGenerator, 3> generators;

  /// 2 when a generator carries a square root, else 1.
  int unit_index() const;
  std::string to_string() const;
};

struct UnitIndices {
  int q1 = 1;
  int q2 = 1;
  int q3 = 1;
  std::array<FsuDescriptor, 3> fsu;
};

/// The candidate multipliers delta with delta (x +- 1) a square.
enum class DeltaSymbol { One, P1, TwoP1, TwoP2, Q, P2, TwoQ };

std::string_view to_string(DeltaSymbol d) noexcept;
std::uint64_t delta_value(DeltaSymbol d, const PrimeTriple& t);

/// Case1 {1, p1, 2p1}; Case3 {2p1, 2p2, q}; Case4 {2p1, p2, 2q}.
/// Throws NoDeltaSetForCase2 for Case2 and InvalidArgument for other tags.
std::array<DeltaSymbol, 3> delta_set(CaseTag c);

struct ResolvedDelta {
  DeltaSymbol delta = DeltaSymbol::One;
  Sign sign = Sign::Plus;  // Plus: delta (x + 1) is a square; Minus: delta (x - 1)
};

/// The member of delta_set(c) matching the square classes of x -+ 1 for
/// the fundamental unit of Q(sqrt(2 p1 p2 q)). Throws DeltaNotInLemmaSet.
ResolvedDelta resolve_delta(CaseTag c, const SquareClassPair& x_classes, const PrimeTriple& t);

/// Whether delta (z +- 1) is a square, z from the unit of Q(sqrt(2 p1 q)).
/// For Case4 with delta = p2 the test is on z +- 1 itself.
bool z_condition(CaseTag c, DeltaSymbol delta, const SquareClassPair& z_classes, const PrimeTriple& t);

/// FSU descriptors of K1, K2, K3 and their unit indices for the given
/// lemma sub-case. Throws LemmaSubcaseMissing if delta is outside the case's set.
UnitIndices unit_indices(CaseTag c, DeltaSymbol delta, const SquareClassPair& z_classes, Sign norm_p1p2,
                         const PrimeTriple& t);

/// (t1 != t2) <=> (N(eps_{p1 p2}) = +1 and h_2(p1 p2) = 2).
bool scholz_norm_check(Sign t1, Sign t2, Sign norm_p1p2, std::uint64_t h2_p1p2);

}  // namespace towerlab
