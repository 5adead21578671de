#pragma once

// Fundamental units of real quadratic fields by periodic continued fractions,
// and the square classes of x - 1 and x + 1 for the Pell solution (x, y).

#include <cstdint>
#include <span>
#include <vector>

#include "towerlab/ntheory.hpp"

namespace towerlab {

/// (x_num + y_num * sqrt(m)) / denom, the smallest unit > 1 of the maximal
/// order of Q(sqrt(m)). denom is 2 only for m = 5 (mod 8) with x_num, y_num odd.
struct FundamentalUnit {
  std::uint64_t m = 0;
  Int x_num;
  Int y_num;
  int denom = 1;
  Sign norm = Sign::Plus;
};

struct PellSolution {
  Int x;
  Int y;
};

/// Squarefree parts of x - 1 and x + 1; each times its argument is a square.
struct SquareClassPair {
  std::uint64_t f_minus = 1;
  std::uint64_t f_plus = 1;

  bool contains(std::uint64_t f) const noexcept { return f == f_minus || f == f_plus; }
};

inline constexpr std::uint64_t kPeriodGuard = 10'000'000;

FundamentalUnit fundamental_unit(std::uint64_t m);

/// Minimal solution of x^2 - m y^2 = 1. For a half-integral fundamental unit
/// this is its cube. Throws NormMinusOne when the fundamental unit has norm -1.
PellSolution pell_xy(std::uint64_t m);

/// Square classes of x -+ 1 restricted to the given prime support. Throws
/// UnexpectedSquareClass if a cofactor outside the support is not a square.
SquareClassPair square_classes(const Int& x, std::span<const std::uint64_t> support);

/// Square classes of x -+ 1 for x from pell_xy(m), support = primes of 2m.
SquareClassPair square_class_pair(std::uint64_t m);

}  // namespace towerlab
