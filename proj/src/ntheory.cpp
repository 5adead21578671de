#include "towerlab/ntheory.hpp"

#include <array>
#include <string>

#include "towerlab/errors.hpp"

namespace towerlab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

bool fits_u64(const Int& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Int& n) {
  // mpz_get_ui is only 64 bits wide on LP64 targets.
  static_assert(sizeof(unsigned long) == 8);
  return mpz_get_ui(n.get_mpz_t());
}

}  // namespace

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::UndefinedQuarticSymbol: return "UndefinedQuarticSymbol";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::PeriodGuardExceeded: return "PeriodGuardExceeded";
    case Errc::NormMinusOne: return "NormMinusOne";
    case Errc::UnexpectedSquareClass: return "UnexpectedSquareClass";
    case Errc::InvalidDiscriminant: return "InvalidDiscriminant";
    case Errc::RemarkInapplicable: return "RemarkInapplicable";
    case Errc::NoRepresentation: return "NoRepresentation";
    case Errc::ConventionMismatch: return "ConventionMismatch";
    case Errc::NoDeltaSetForCase2: return "NoDeltaSetForCase2";
    case Errc::DeltaNotInLemmaSet: return "DeltaNotInLemmaSet";
    case Errc::LemmaSubcaseMissing: return "LemmaSubcaseMissing";
    case Errc::UnclassifiableProfile: return "UnclassifiableProfile";
    case Errc::NonIntegralClassNumber: return "NonIntegralClassNumber";
    case Errc::CriteriaInputMissing: return "CriteriaInputMissing";
    case Errc::InvalidTriple: return "InvalidTriple";
    case Errc::FixtureMismatch: return "FixtureMismatch";
    case Errc::OracleUnavailable: return "OracleUnavailable";
    case Errc::OracleParseError: return "OracleParseError";
    case Errc::OracleMismatch: return "OracleMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Sign sign_from_int(int v) {
  if (v == 1) return Sign::Plus;
  if (v == -1) return Sign::Minus;
  throw Error(Errc::InvalidArgument, "sign must be +1 or -1, got " + std::to_string(v));
}

OddPrime::OddPrime(std::uint64_t p) : p_(p) {
  if (p == 2 || !is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not an odd prime");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kBases) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (sgn(n) <= 0) return false;
  if (fits_u64(n)) return is_prime(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

int legendre_symbol(const Int& a, const OddPrime& p) {
  const Int modulus(static_cast<unsigned long>(p.value()));
  Int base = a % modulus;
  if (base < 0) base += modulus;
  if (base == 0) return 0;
  Int r;
  const Int exponent = (modulus - 1) / 2;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r == 1 ? 1 : -1;
}

int kronecker_symbol(const Int& a_in, const Int& n_in) {
  if (n_in == 0) throw Error(Errc::InvalidArgument, "Kronecker symbol with zero denominator");
  Int a = a_in;
  Int n = n_in;
  int result = 1;

  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // Remove powers of 2 from n using (a/2).
  const mp_bitcnt_t twos = mpz_scan1(n.get_mpz_t(), 0);
  if (twos > 0) {
    if (mpz_even_p(a.get_mpz_t())) return 0;
    n >>= twos;
    if (twos & 1) {
      const unsigned long a8 = mpz_fdiv_ui(a.get_mpz_t(), 8);
      if (a8 == 3 || a8 == 5) result = -result;
    }
  }
  // Jacobi symbol (a/n), n odd positive.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    const mp_bitcnt_t v = mpz_scan1(a.get_mpz_t(), 0);
    a >>= v;
    if (v & 1) {
      const unsigned long n8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (n8 == 3 || n8 == 5) result = -result;
    }
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) result = -result;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? result : 0;
}

Sign quartic_symbol(const Int& a, const OddPrime& p) {
  if (p.value() % 4 != 1) {
    throw Error(Errc::UndefinedQuarticSymbol, "modulus " + std::to_string(p.value()) + " is not 1 mod 4");
  }
  if (legendre_symbol(a, p) != 1) {
    throw Error(Errc::UndefinedQuarticSymbol,
                a.get_str() + " is not a quadratic residue mod " + std::to_string(p.value()));
  }
  const Int modulus(static_cast<unsigned long>(p.value()));
  Int base = a % modulus;
  if (base < 0) base += modulus;
  Int r;
  const Int exponent = (modulus - 1) / 4;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  if (r == 1) return Sign::Plus;
  if (r == modulus - 1) return Sign::Minus;
  // Unreachable when a is a quadratic residue.
  throw Error(Errc::UndefinedQuarticSymbol, "a^((p-1)/4) is not +-1");
}

Int isqrt(const Int& n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "isqrt of a negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

bool is_perfect_square(const Int& n) { return exact_sqrt(n).has_value(); }

std::vector<std::pair<std::uint64_t, int>> factor_small(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  if (n < 2) return out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factor_small(n)) {
    if (e > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace towerlab
