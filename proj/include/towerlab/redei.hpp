#pragma once

// Redei matrix over F_2 and the 4-rank of the narrow class group.

#include <cstdint>
#include <vector>

namespace towerlab {

/// Prime discriminants whose product is the discriminant of Q(sqrt(m)).
/// Positive entries first, then negative, each ascending by absolute value.
struct PrimeDiscriminantList {
  std::vector<std::int64_t> entries;
  int s = 0;  // positive entries
  int t = 0;  // negative entries

  std::int64_t product() const;
  /// The rational prime under entry i (2 for -4, 8, -8).
  std::uint64_t prime(std::size_t i) const;
};

struct RedeiMatrix {
  std::vector<std::vector<std::uint8_t>> entries;  // 0/1
  int rank = 0;

  std::size_t size() const noexcept { return entries.size(); }
};

PrimeDiscriminantList prime_discriminants(std::int64_t m);

/// Off-diagonal (-1)^a_ij = (p*_i / p_j), diagonal (-1)^a_ii = ((d/p*_i) / p_i),
/// both as Kronecker symbols.
RedeiMatrix redei_matrix(std::int64_t m);

/// Rank over F_2 by Gaussian elimination.
int rank_gf2(std::vector<std::vector<std::uint8_t>> rows);

/// s + t - 1 - rank(R): the 4-rank of the narrow class group.
int narrow_four_rank(std::int64_t m);

/// Wide 4-rank; equals the narrow one when a prime = 3 (mod 4) divides m,
/// otherwise throws RemarkInapplicable.
int four_rank(std::int64_t m);

}  // namespace towerlab
