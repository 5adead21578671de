#include "towerlab/pell.hpp"

#include <string>

#include "towerlab/errors.hpp"

namespace towerlab {

namespace {

Int from_u64(std::uint64_t v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace

FundamentalUnit fundamental_unit(std::uint64_t m) {
  if (m < 2 || !is_squarefree(m)) {
    throw Error(Errc::NotSquarefree, "radicand " + std::to_string(m) + " must be squarefree and > 1");
  }
  const Int M = from_u64(m);
  const bool half = m % 4 == 1;

  // Complete quotients (P + sqrt(m)) / Q of omega = sqrt(m) or (1 + sqrt(m)) / 2.
  const Int Q0 = half ? 2 : 1;
  Int P = half ? 1 : 0;
  Int Q = Q0;
  const Int s = isqrt(M);

  // Convergents p_{k-1}/q_{k-1} and p_{k-2}/q_{k-2}, seeded with k = 0.
  Int p = 1, p_prev = 0;
  Int q = 0, q_prev = 1;

  for (std::uint64_t k = 0; k < kPeriodGuard; ++k) {
    const Int a = (P + s) / Q;
    Int p_next = a * p + p_prev;
    Int q_next = a * q + q_prev;
    p_prev = std::move(p);
    p = std::move(p_next);
    q_prev = std::move(q);
    q = std::move(q_next);

    P = a * Q - P;
    Q = (M - P * P) / Q;
    if (Q != Q0) continue;

    FundamentalUnit fu;
    fu.m = m;
    if (half) {
      // The unit is the conjugate of p - q * omega.
      fu.x_num = 2 * p - q;
      fu.y_num = q;
      fu.denom = 2;
      if (mpz_even_p(fu.x_num.get_mpz_t()) && mpz_even_p(fu.y_num.get_mpz_t())) {
        fu.x_num /= 2;
        fu.y_num /= 2;
        fu.denom = 1;
      }
    } else {
      fu.x_num = p;
      fu.y_num = q;
      fu.denom = 1;
    }
    const Int norm_num = fu.x_num * fu.x_num - M * fu.y_num * fu.y_num;
    const Int d2 = fu.denom * fu.denom;
    if (norm_num == d2) {
      fu.norm = Sign::Plus;
    } else if (norm_num == -d2) {
      fu.norm = Sign::Minus;
    } else {
      throw Error(Errc::PeriodGuardExceeded, "period end reached without a unit for m=" + std::to_string(m));
    }
    return fu;
  }
  throw Error(Errc::PeriodGuardExceeded, "continued fraction period guard exceeded for m=" + std::to_string(m));
}

PellSolution pell_xy(std::uint64_t m) {
  const FundamentalUnit fu = fundamental_unit(m);
  if (fu.norm == Sign::Minus) {
    throw Error(Errc::NormMinusOne, "fundamental unit of Q(sqrt(" + std::to_string(m) + ")) has norm -1");
  }
  if (fu.denom == 1) return {fu.x_num, fu.y_num};

  // Powers of (x + y sqrt(m)) / 2 until both coordinates are even; at most a cube.
  const Int M = from_u64(m);
  Int X = fu.x_num, Y = fu.y_num;
  for (int k = 1; k <= 3; ++k) {
    if (mpz_even_p(X.get_mpz_t()) && mpz_even_p(Y.get_mpz_t())) return {X / 2, Y / 2};
    Int X2 = (X * fu.x_num + M * Y * fu.y_num) / 2;
    Int Y2 = (X * fu.y_num + Y * fu.x_num) / 2;
    X = std::move(X2);
    Y = std::move(Y2);
  }
  if (mpz_even_p(X.get_mpz_t()) && mpz_even_p(Y.get_mpz_t())) return {X / 2, Y / 2};
  throw Error(Errc::UnexpectedSquareClass, "no power of the unit lies in Z[sqrt(m)]");
}

SquareClassPair square_classes(const Int& x, std::span<const std::uint64_t> support) {
  auto squarefree_part = [&](Int n) -> std::uint64_t {
    if (n <= 0) throw Error(Errc::UnexpectedSquareClass, "x -+ 1 must be positive");
    std::uint64_t f = 1;
    for (std::uint64_t p : support) {
      const Int P = from_u64(p);
      const mp_bitcnt_t e = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t());
      if (e & 1) f *= p;
    }
    if (!is_perfect_square(n)) {
      throw Error(Errc::UnexpectedSquareClass, "cofactor outside the prime support is not a square");
    }
    return f;
  };
  SquareClassPair pair;
  pair.f_minus = squarefree_part(x - 1);
  pair.f_plus = squarefree_part(x + 1);
  return pair;
}

SquareClassPair square_class_pair(std::uint64_t m) {
  const PellSolution sol = pell_xy(m);
  std::vector<std::uint64_t> support{2};
  for (const auto& [p, e] : factor_small(m)) {
    if (p != 2) support.push_back(p);
  }
  const SquareClassPair pair = square_classes(sol.x, support);

  // f_minus * f_plus * (x^2 - 1) = f_minus * f_plus * m * y^2 must be a square.
  const Int check = Int(from_u64(pair.f_minus)) * from_u64(pair.f_plus) * from_u64(m);
  if (!is_perfect_square(check)) {
    throw Error(Errc::UnexpectedSquareClass, "square classes inconsistent with x^2 - 1 = m y^2");
  }
  return pair;
}

}  // namespace towerlab
