#include "towerlab/kaplan.hpp"

#include <string>
#include <tuple>

#include "towerlab/errors.hpp"

namespace towerlab {

namespace {

Sign legendre_sign(std::int64_t a, const OddPrime& p) {
  const int v = legendre_symbol(Int(static_cast<long>(a)), p);
  if (v == 0) throw Error(Errc::InvalidArgument, std::to_string(p.value()) + " divides " + std::to_string(a));
  return sign_from_int(v);
}

// Smallest x > 0 with n = 2x^2 + sign * y^2 for some y > 0.
std::pair<std::uint64_t, std::uint64_t> represent(std::uint64_t n, int sign) {
  for (std::uint64_t x = 1; x <= n; ++x) {
    const std::int64_t rest = sign > 0 ? static_cast<std::int64_t>(n) - static_cast<std::int64_t>(2 * x * x)
                                       : static_cast<std::int64_t>(2 * x * x) - static_cast<std::int64_t>(n);
    if (sign > 0 && rest <= 0) break;
    if (rest <= 0) continue;
    if (const auto y = exact_sqrt(Int(static_cast<long>(rest)))) {
      return {x, y->get_ui()};
    }
  }
  throw Error(Errc::NoRepresentation,
              std::to_string(n) + " has no representation 2x^2 " + (sign > 0 ? "+" : "-") + " y^2");
}

}  // namespace

SymbolProfile SymbolProfile::legendre_swapped() const {
  SymbolProfile out;
  out.leg_2p1 = leg_2p2;
  out.leg_2p2 = leg_2p1;
  out.leg_p1p2 = leg_p1p2;
  out.leg_qp1 = leg_qp2;
  out.leg_qp2 = leg_qp1;
  out.t1 = t2;
  out.t2 = t1;
  return out;
}

KaplanData decompose(const OddPrime& p1, const OddPrime& q) {
  if (p1.value() % 8 != 1) throw Error(Errc::NoRepresentation, "p1 must be 1 mod 8");
  if (q.value() % 4 != 3) throw Error(Errc::NoRepresentation, "q must be 3 mod 4");
  KaplanData k;
  // (2/q) = -1 for q = 3 (mod 8), +1 for q = 7 (mod 8).
  k.gamma = q.value() % 8 == 3 ? 0 : 1;
  const int sign = k.gamma == 0 ? 1 : -1;
  std::tie(k.e, k.d) = represent(p1.value(), sign);
  std::tie(k.r, k.s) = represent(q.value(), sign);
  const auto e = static_cast<std::int64_t>(k.e), d = static_cast<std::int64_t>(k.d);
  const auto r = static_cast<std::int64_t>(k.r), s = static_cast<std::int64_t>(k.s);
  k.A = s * d + 2 * e * r + 2 * k.gamma * (e * s + d * r);
  return k;
}

Sign alpha_symbol(const OddPrime& p1, const OddPrime& q) {
  const KaplanData k = decompose(p1, q);
  const int v = legendre_symbol(Int(static_cast<long>(k.A)), p1);
  if (v == 0) {
    throw Error(Errc::ConventionMismatch,
                "A=" + std::to_string(k.A) + " is divisible by p1=" + std::to_string(p1.value()));
  }
  return sign_from_int(v);
}

SymbolProfile symbol_profile(const OddPrime& p1, const OddPrime& p2, const OddPrime& q) {
  SymbolProfile sp;
  sp.leg_2p1 = legendre_sign(2, p1);
  sp.leg_2p2 = legendre_sign(2, p2);
  sp.leg_p1p2 = legendre_sign(static_cast<std::int64_t>(p1.value()), p2);
  sp.leg_qp1 = legendre_sign(static_cast<std::int64_t>(q.value()), p1);
  sp.leg_qp2 = legendre_sign(static_cast<std::int64_t>(q.value()), p2);

  if (sp.leg_p1p2 == Sign::Plus) {
    sp.t1 = quartic_symbol(Int(static_cast<unsigned long>(p1.value())), p2);
    sp.t2 = quartic_symbol(Int(static_cast<unsigned long>(p2.value())), p1);
  }
  const Int two_q(static_cast<unsigned long>(2 * q.value()));
  if (legendre_symbol(two_q, p1) == 1) sp.s4 = quartic_symbol(two_q, p1);
  if (p1.value() % 8 == 1 && sp.leg_qp1 == Sign::Plus) sp.alpha = alpha_symbol(p1, q);
  return sp;
}

bool h2_2pq_is_4(const OddPrime& p1, const OddPrime& q) {
  if (legendre_sign(2, p1) != Sign::Plus || legendre_sign(static_cast<std::int64_t>(q.value()), p1) != Sign::Plus) {
    throw Error(Errc::InvalidArgument, "Kaplan criterion needs (2/p1) = (q/p1) = 1");
  }
  const Sign s4 = quartic_symbol(Int(static_cast<unsigned long>(2 * q.value())), p1);
  return alpha_symbol(p1, q) == Sign::Minus || s4 == Sign::Minus;
}

}  // namespace towerlab
