#pragma once

// Narrow class groups of real quadratic orders of fundamental discriminant,
// computed from cycles of reduced indefinite binary quadratic forms.

#include <compare>
#include <cstdint>
#include <vector>

namespace towerlab {

/// a x^2 + b x y + c y^2.
struct QuadForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const noexcept { return b * b - 4 * a * c; }
  /// 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
  bool is_reduced() const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
  friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

/// Discriminant of Q(sqrt(m)): m when m = 1 (mod 4), else 4m.
std::int64_t field_discriminant(std::int64_t m);

/// Every primitive reduced form of discriminant D, sorted lexicographically by (a, b, c).
/// Throws InvalidDiscriminant unless D > 0, D = 0 or 1 (mod 4), non-square.
std::vector<QuadForm> enumerate_reduced_forms(std::int64_t D);

/// The reduced forms partitioned into rho-cycles (one cycle per proper class).
std::vector<std::vector<QuadForm>> reduced_form_cycles(std::int64_t D);

/// One rho step: (a, b, c) -> (c, b', a') with b' = -b (mod 2c).
QuadForm rho(const QuadForm& f);
/// Applies rho until the form is reduced.
QuadForm reduce(QuadForm f);
/// Dirichlet composition of primitive forms of equal discriminant, reduced.
QuadForm compose(const QuadForm& f, const QuadForm& g);

class NarrowClassGroup {
 public:
  explicit NarrowClassGroup(std::int64_t discriminant);

  std::int64_t discriminant() const noexcept { return discriminant_; }
  std::uint64_t order() const noexcept { return reps_.size(); }
  const std::vector<QuadForm>& cycle_representatives() const noexcept { return reps_; }
  /// Invariant factors d_1 | d_2 | ... (empty for the trivial group).
  const std::vector<std::uint64_t>& elementary_divisors() const noexcept { return invariants_; }
  /// 2-parts of the invariant factors, trivial ones dropped.
  std::vector<std::uint64_t> two_sylow() const;
  std::uint64_t two_part_order() const;
  int two_rank() const;
  int four_rank() const;

  /// Index of the class of f (any form of this discriminant).
  std::size_t class_of(const QuadForm& f) const;
  std::size_t identity() const noexcept { return identity_; }
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::uint64_t element_order(std::size_t i) const;

 private:
  std::int64_t discriminant_;
  std::vector<QuadForm> reps_;
  std::vector<QuadForm> reduced_;           // sorted
  std::vector<std::size_t> reduced_class_;  // parallel to reduced_
  std::size_t identity_ = 0;
  std::vector<std::uint64_t> invariants_;
};

NarrowClassGroup narrow_class_group(std::int64_t D);

/// 2-part of the wide class number of Q(sqrt(m)).
std::uint64_t h2_wide(std::uint64_t m);

/// Wide 2-class group invariants when a prime = 3 (mod 4) divides m,
/// read off the narrow group by dropping one factor Z/2. Throws
/// RemarkInapplicable otherwise.
std::vector<std::uint64_t> cl2_invariants(std::uint64_t m);

}  // namespace towerlab
