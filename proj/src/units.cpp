#include "towerlab/units.hpp"

#include <algorithm>

#include "towerlab/errors.hpp"

namespace towerlab {

namespace {

using enum UnitToken;

UnitGenerator plain(UnitToken t) { return {{t}, false}; }
UnitGenerator root_of(std::vector<UnitToken> factors) { return {std::move(factors), true}; }

// K1 always carries a square root; which one depends only on delta.
UnitGenerator k1_root(DeltaSymbol delta) {
  if (delta == DeltaSymbol::TwoP1) return root_of({Eps2P1P2q});
  return root_of({Eps2P2q, Eps2P1P2q});
}

}  // namespace

std::string_view to_string(UnitToken t) noexcept {
  switch (t) {
    case EpsP1: return "eps_p1";
    case EpsP2: return "eps_p2";
    case Eps2q: return "eps_2q";
    case EpsP1P2: return "eps_p1p2";
    case Eps2P1q: return "eps_2p1q";
    case Eps2P2q: return "eps_2p2q";
    case Eps2P1P2q: return "eps_2p1p2q";
  }
  return "?";
}

std::string UnitGenerator::to_string() const {
  std::string body;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) body += "*";
    body += towerlab::to_string(factors[i]);
  }
  return root ? "sqrt(" + body + ")" : body;
}

int FsuDescriptor::unit_index() const {
  const auto roots = std::count_if(generators.begin(), generators.end(), [](const auto& g) { return g.root; });
  if (roots > 1) throw Error(Errc::LemmaSubcaseMissing, "FSU with more than one square root");
  return roots == 1 ? 2 : 1;
}

std::string FsuDescriptor::to_string() const {
  return "{" + generators[0].to_string() + ", " + generators[1].to_string() + ", " + generators[2].to_string() + "}";
}

std::string_view to_string(DeltaSymbol d) noexcept {
  switch (d) {
    case DeltaSymbol::One: return "1";
    case DeltaSymbol::P1: return "p1";
    case DeltaSymbol::TwoP1: return "2p1";
    case DeltaSymbol::TwoP2: return "2p2";
    case DeltaSymbol::Q: return "q";
    case DeltaSymbol::P2: return "p2";
    case DeltaSymbol::TwoQ: return "2q";
  }
  return "?";
}

std::uint64_t delta_value(DeltaSymbol d, const PrimeTriple& t) {
  switch (d) {
    case DeltaSymbol::One: return 1;
    case DeltaSymbol::P1: return t.p1.value();
    case DeltaSymbol::TwoP1: return 2 * t.p1.value();
    case DeltaSymbol::TwoP2: return 2 * t.p2.value();
    case DeltaSymbol::Q: return t.q.value();
    case DeltaSymbol::P2: return t.p2.value();
    case DeltaSymbol::TwoQ: return 2 * t.q.value();
  }
  return 0;
}

std::array<DeltaSymbol, 3> delta_set(CaseTag c) {
  switch (c) {
    case CaseTag::Case1: return {DeltaSymbol::One, DeltaSymbol::P1, DeltaSymbol::TwoP1};
    case CaseTag::Case3: return {DeltaSymbol::TwoP1, DeltaSymbol::TwoP2, DeltaSymbol::Q};
    case CaseTag::Case4: return {DeltaSymbol::TwoP1, DeltaSymbol::P2, DeltaSymbol::TwoQ};
    case CaseTag::Case2: throw Error(Errc::NoDeltaSetForCase2, "Case2 has no delta set");
    default: throw Error(Errc::InvalidArgument, std::string("no delta set for ") + std::string(to_string(c)));
  }
}

ResolvedDelta resolve_delta(CaseTag c, const SquareClassPair& x_classes, const PrimeTriple& t) {
  for (DeltaSymbol d : delta_set(c)) {
    const std::uint64_t v = delta_value(d, t);
    if (v == x_classes.f_plus) return {d, Sign::Plus};
    if (v == x_classes.f_minus) return {d, Sign::Minus};
  }
  throw Error(Errc::DeltaNotInLemmaSet, "square classes {" + std::to_string(x_classes.f_minus) + ", " +
                                            std::to_string(x_classes.f_plus) + "} of x -+ 1 miss the " +
                                            std::string(to_string(c)) + " set for d=" + std::to_string(t.d()));
}

bool z_condition(CaseTag c, DeltaSymbol delta, const SquareClassPair& z_classes, const PrimeTriple& t) {
  const std::uint64_t multiplier = (c == CaseTag::Case4 && delta == DeltaSymbol::P2) ? 1 : delta_value(delta, t);
  return z_classes.contains(multiplier);
}

UnitIndices unit_indices(CaseTag c, DeltaSymbol delta, const SquareClassPair& z_classes, Sign norm_p1p2,
                         const PrimeTriple& t) {
  const auto set = delta_set(c);
  if (std::find(set.begin(), set.end(), delta) == set.end()) {
    throw Error(Errc::LemmaSubcaseMissing,
                "delta=" + std::string(to_string(delta)) + " outside the " + std::string(to_string(c)) + " delta set");
  }
  const bool norm_plus = norm_p1p2 == Sign::Plus;
  UnitIndices out;

  out.fsu[0].generators = {plain(EpsP1), plain(Eps2P2q), k1_root(delta)};

  UnitGenerator k2_third;
  if (c == CaseTag::Case3 && delta == DeltaSymbol::TwoP2) {
    k2_third = root_of({Eps2P1P2q});
  } else if (z_condition(c, delta, z_classes, t)) {
    k2_third = root_of({Eps2P1q, Eps2P1P2q});
  } else {
    k2_third = plain(Eps2P1P2q);
  }
  out.fsu[1].generators = {plain(EpsP2), plain(Eps2P1q), k2_third};

  // K3: either an unconditional root, or a root that exists only when
  // N(eps_{p1 p2}) = +1.
  UnitGenerator k3_third = plain(Eps2P1P2q);
  switch (c) {
    case CaseTag::Case1:
      if (delta == DeltaSymbol::One) {
        k3_third = root_of({Eps2q, Eps2P1P2q});
      } else if (norm_plus) {
        k3_third = delta == DeltaSymbol::P1 ? root_of({Eps2q, EpsP1P2, Eps2P1P2q}) : root_of({EpsP1P2, Eps2P1P2q});
      }
      break;
    case CaseTag::Case3:
      if (delta == DeltaSymbol::Q) {
        k3_third = root_of({Eps2P1P2q});
      } else if (norm_plus) {
        k3_third = root_of({EpsP1P2, Eps2P1P2q});
      }
      break;
    case CaseTag::Case4:
      if (delta == DeltaSymbol::TwoQ) {
        k3_third = root_of({Eps2q, Eps2P1P2q});
      } else if (norm_plus) {
        k3_third = delta == DeltaSymbol::P2 ? root_of({Eps2q, EpsP1P2, Eps2P1P2q}) : root_of({EpsP1P2, Eps2P1P2q});
      }
      break;
    default:
      break;
  }
  out.fsu[2].generators = {plain(Eps2q), plain(EpsP1P2), k3_third};

  out.q1 = out.fsu[0].unit_index();
  out.q2 = out.fsu[1].unit_index();
  out.q3 = out.fsu[2].unit_index();
  return out;
}

bool scholz_norm_check(Sign t1, Sign t2, Sign norm_p1p2, std::uint64_t h2_p1p2) {
  return (t1 != t2) == (norm_p1p2 == Sign::Plus && h2_p1p2 == 2);
}

}  // namespace towerlab
