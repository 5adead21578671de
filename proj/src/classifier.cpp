#include "towerlab/classifier.hpp"

#include <algorithm>
#include <numeric>

#include "towerlab/errors.hpp"
#include "towerlab/formclass.hpp"
#include "towerlab/redei.hpp"

namespace towerlab {

namespace {

constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

// 4-rank-1 cases, read with the profile's literal p1/p2 roles.
std::optional<CaseTag> four_rank_one_case(const SymbolProfile& s) {
  if (s.leg_2p1 == P && s.leg_2p2 == P && s.leg_p1p2 == P && s.leg_qp1 * s.leg_qp2 == M) return CaseTag::Case1;
  if (s.leg_2p1 == P && s.leg_2p2 == P && s.leg_qp1 == P && s.leg_qp2 == P && s.leg_p1p2 == M) return CaseTag::Case2;
  if (s.leg_2p1 == P && s.leg_2p2 == M && s.leg_p1p2 == P && s.leg_qp1 == P) {
    return s.leg_qp2 == M ? CaseTag::Case3 : CaseTag::Case4;
  }
  if (s.leg_2p1 == M && s.leg_2p2 == M && s.leg_qp1 == M && s.leg_qp2 == M) return CaseTag::Metacyclic;
  return std::nullopt;
}

// Benjamin-Snyder conditions for Cl_2(k) of type (2,2).
bool type_two_two(const SymbolProfile& s) {
  const bool all_equal = s.leg_2p1 == s.leg_2p2 && s.leg_2p1 == s.leg_qp1 && s.leg_2p1 == s.leg_qp2;
  if (s.leg_p1p2 == M) return !all_equal;
  return (s.leg_2p1 == M || s.leg_qp1 == M) && (s.leg_2p2 == M || s.leg_qp2 == M) && !all_equal;
}

std::uint64_t product(const std::vector<std::uint64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::uint64_t{1}, std::multiplies<>());
}

int expected_four_rank(CaseTag c) {
  switch (c) {
    case CaseTag::TypeTwoTwo: return 0;
    case CaseTag::FourRankTwo: return 2;
    default: return 1;
  }
}

std::string sign_str(std::optional<Sign> s) { return s ? std::to_string(to_int(*s)) : "undefined"; }

}  // namespace

std::string_view to_string(GType g) noexcept {
  switch (g) {
    case GType::Abelian: return "Abelian";
    case GType::Modular: return "Modular";
    case GType::MetacyclicNonAbelianNonModular: return "MetacyclicNonAbelianNonModular";
    case GType::NonMetacyclic: return "NonMetacyclic";
    case GType::OutOfScope: return "OutOfScope";
  }
  return "?";
}

std::string_view to_string(HilbertCl2 h) noexcept {
  switch (h) {
    case HilbertCl2::Order2: return "Order2";
    case HilbertCl2::CyclicNonElementary: return "CyclicNonElementary";
    case HilbertCl2::RankAtLeastTwo: return "RankAtLeastTwo";
    case HilbertCl2::OutOfScope: return "OutOfScope";
  }
  return "?";
}

std::string_view to_string(Thm4Pattern p) noexcept {
  return p == Thm4Pattern::CyclicNonElementary ? "CyclicNonElementary" : "NotNonElementaryCyclic";
}

CaseTag case_of(const SymbolProfile& profile) {
  const bool all_plus = profile.leg_2p1 == P && profile.leg_2p2 == P && profile.leg_p1p2 == P &&
                        profile.leg_qp1 == P && profile.leg_qp2 == P;
  if (all_plus) return CaseTag::FourRankTwo;
  if (auto c = four_rank_one_case(profile)) return *c;
  if (auto c = four_rank_one_case(profile.legendre_swapped())) return *c;
  if (type_two_two(profile) || type_two_two(profile.legendre_swapped())) return CaseTag::TypeTwoTwo;
  throw Error(Errc::UnclassifiableProfile, "symbol profile matches no case");
}

PrimeTriple normalize_roles(const PrimeTriple& t) {
  const SymbolProfile s = symbol_profile(t);
  switch (case_of(s)) {
    case CaseTag::Case1:
      return s.leg_qp1 == P ? t : t.swapped();
    case CaseTag::Case3:
    case CaseTag::Case4:
      return s.leg_2p1 == P ? t : t.swapped();
    default:
      return t.p1 < t.p2 ? t : t.swapped();
  }
}

std::array<std::uint64_t, 3> kuroda_radicands(int i, const PrimeTriple& t) {
  const std::uint64_t p1 = t.p1, p2 = t.p2, q = t.q;
  switch (i) {
    case 1: return {p1, 2 * p2 * q, t.d()};
    case 2: return {p2, 2 * p1 * q, t.d()};
    case 3: return {2 * q, p1 * p2, t.d()};
    default: throw Error(Errc::InvalidArgument, "field index must be 1, 2 or 3");
  }
}

std::uint64_t kuroda_h2(int q_i, const std::array<std::uint64_t, 3>& subfield_h2) {
  if (q_i != 1 && q_i != 2) throw Error(Errc::InvalidArgument, "unit index must be 1 or 2");
  const std::uint64_t num = static_cast<std::uint64_t>(q_i) * subfield_h2[0] * subfield_h2[1] * subfield_h2[2];
  if (num % 4 != 0 || (num / 4 & (num / 4 - 1)) != 0) {
    throw Error(Errc::NonIntegralClassNumber, std::to_string(num) + "/4 is not a power of 2");
  }
  return num / 4;
}

std::uint64_t kuroda_h2(int i, int q_i, const PrimeTriple& t) {
  const auto r = kuroda_radicands(i, t);
  return kuroda_h2(q_i, {h2_wide(r[0]), h2_wide(r[1]), h2_wide(r[2])});
}

Thm4Pattern thm4_cyclicity(std::uint64_t n, std::uint64_t n1, std::uint64_t n2, std::uint64_t n3) {
  const std::array<std::uint64_t, 3> v{n1, n2, n3};
  for (int i = 0; i < 3; ++i) {
    if (v[i] >= 2 * n && v[(i + 1) % 3] == n && v[(i + 2) % 3] == n) return Thm4Pattern::CyclicNonElementary;
  }
  return Thm4Pattern::NotNonElementaryCyclic;
}

GType metacyclic_type(const SymbolProfile& profile, const PrimeTriple& t) {
  const CaseTag c = case_of(profile);
  if (c == CaseTag::TypeTwoTwo || c == CaseTag::FourRankTwo) return GType::OutOfScope;
  if (c != CaseTag::Metacyclic) return GType::NonMetacyclic;
  if (profile.leg_p1p2 == P) return GType::MetacyclicNonAbelianNonModular;
  const SquareClassPair x = square_class_pair(t.d());
  return x.f_plus == 2 * t.p1.value() * t.p2.value() ? GType::Modular : GType::Abelian;
}

std::optional<RankProfile> rank_profile(CaseTag c, const SymbolProfile& profile) {
  switch (c) {
    case CaseTag::FourRankTwo: return RankProfile{3, 3, 3};
    case CaseTag::Case1:
    case CaseTag::Case3:
    case CaseTag::Case4: return RankProfile{3, 2, 2};
    case CaseTag::Case2: return RankProfile{2, 2, 3};
    case CaseTag::Metacyclic:
      return profile.leg_p1p2 == P ? RankProfile{2, 2, 2} : RankProfile{1, 1, 2};
    default: return std::nullopt;
  }
}

CriteriaOutcome hilbert_cl2_criteria(CaseTag c, const CriteriaInputs& in) {
  if (c == CaseTag::Case2) return {HilbertCl2::RankAtLeastTwo, "Case2: rank at least 2 unconditionally"};
  DeltaSymbol distinguished;
  switch (c) {
    case CaseTag::Case1: distinguished = DeltaSymbol::One; break;
    case CaseTag::Case3: distinguished = DeltaSymbol::Q; break;
    case CaseTag::Case4: distinguished = DeltaSymbol::TwoQ; break;
    default: return {HilbertCl2::OutOfScope, "no cyclicity criteria outside the (2,2^n) cases"};
  }
  if (!in.alpha || !in.s4 || !in.t1 || !in.t2) {
    throw Error(Errc::CriteriaInputMissing, "alpha=" + sign_str(in.alpha) + " s=" + sign_str(in.s4) +
                                                " t1=" + sign_str(in.t1) + " t2=" + sign_str(in.t2));
  }
  const bool z_fails = !in.z_square && !(c == CaseTag::Case3 && in.delta == DeltaSymbol::TwoP2);
  const bool kap = *in.alpha == M || *in.s4 == M;  // h_2(2 p1 q) = 4
  const bool t_equal = *in.t1 == *in.t2;
  const bool t_both_plus = *in.t1 == P && *in.t2 == P;
  const bool at_distinguished = in.delta == distinguished;

  if (z_fails && kap && !t_equal) return {HilbertCl2::Order2, "order-2 criterion"};
  if (z_fails && kap && (at_distinguished ? t_equal : t_both_plus)) {
    return {HilbertCl2::CyclicNonElementary, "cyclicity condition I"};
  }
  if (!(z_fails && kap) && (at_distinguished ? !t_equal : !t_both_plus)) {
    return {HilbertCl2::CyclicNonElementary, "cyclicity condition II"};
  }
  return {HilbertCl2::RankAtLeastTwo, "neither cyclicity condition holds"};
}

ClassificationVerdict classify(std::uint64_t p1, std::uint64_t p2, std::uint64_t q) {
  return classify(make_triple(p1, p2, q));
}

ClassificationVerdict classify(const PrimeTriple& input) {
  ClassificationVerdict v(normalize_roles(input));
  const PrimeTriple& t = v.triple;
  Evidence& ev = v.evidence;
  const std::uint64_t d = t.d();
  const std::uint64_t p1 = t.p1, p2 = t.p2, q = t.q;

  ev.profile = symbol_profile(t);
  v.case_tag = case_of(ev.profile);
  const auto flag = [&ev](std::string msg) { ev.flags.push_back("InternalInconsistency: " + std::move(msg)); };

  ev.four_rank_redei = four_rank(static_cast<std::int64_t>(d));
  if (ev.four_rank_redei != expected_four_rank(v.case_tag)) {
    flag("Redei 4-rank " + std::to_string(ev.four_rank_redei) + " disagrees with case " +
         std::string(to_string(v.case_tag)));
  }

  v.cl2_k = cl2_invariants(d);
  ev.narrow_cl2 = narrow_class_group(field_discriminant(static_cast<std::int64_t>(d))).two_sylow();
  ev.n = product(v.cl2_k);
  const auto group_four_rank = std::count_if(v.cl2_k.begin(), v.cl2_k.end(), [](auto e) { return e % 4 == 0; });
  if (v.cl2_k.size() != 2 || group_four_rank != expected_four_rank(v.case_tag)) {
    flag("class group 2-part does not match case " + std::string(to_string(v.case_tag)));
  }

  v.g_type = metacyclic_type(ev.profile, t);
  ev.ranks = rank_profile(v.case_tag, ev.profile);
  if (v.case_tag == CaseTag::Metacyclic && ev.profile.leg_p1p2 == M) ev.x_classes = square_class_pair(d);

  const auto h2 = [&ev](std::uint64_t m) {
    auto [it, inserted] = ev.subfield_h2.try_emplace(m, 0);
    if (inserted) it->second = h2_wide(m);
    return it->second;
  };

  switch (v.case_tag) {
    case CaseTag::TypeTwoTwo:
      v.hilbert_cl2 = HilbertCl2::OutOfScope;
      ev.basis = "4-rank 0: Cl_2(k) of type (2,2)";
      return v;
    case CaseTag::FourRankTwo:
      v.hilbert_cl2 = HilbertCl2::OutOfScope;
      ev.basis = "4-rank 2: all five symbols equal 1";
      return v;
    case CaseTag::Metacyclic:
      v.hilbert_cl2 = HilbertCl2::OutOfScope;
      ev.basis = "metacyclic family: (q/p1) = (q/p2) = (2/p1) = (2/p2) = -1";
      return v;
    case CaseTag::Case2:
      v.hilbert_cl2 = HilbertCl2::RankAtLeastTwo;
      ev.basis = "Case2: rank at least 2 unconditionally";
      return v;
    default:
      break;
  }

  ev.kaplan = decompose(t.p1, t.q);
  const bool kap = *ev.profile.alpha == M || *ev.profile.s4 == M;
  const std::uint64_t h2_2p1q = h2(2 * p1 * q);
  if (h2_2p1q < 4 || (h2_2p1q == 4) != kap) {
    throw Error(Errc::ConventionMismatch, "Kaplan criterion predicts h2(" + std::to_string(2 * p1 * q) + ")" +
                                              (kap ? "=4" : "!=4") + " but form count gives " +
                                              std::to_string(h2_2p1q));
  }

  ev.x_classes = square_class_pair(d);
  ev.delta = resolve_delta(v.case_tag, *ev.x_classes, t);
  ev.z_classes = square_class_pair(2 * p1 * q);
  ev.z_square = z_condition(v.case_tag, ev.delta->delta, *ev.z_classes, t);
  ev.norm_p1p2 = fundamental_unit(p1 * p2).norm;
  ev.units = unit_indices(v.case_tag, ev.delta->delta, *ev.z_classes, *ev.norm_p1p2, t);

  const std::array<int, 3> qs{ev.units->q1, ev.units->q2, ev.units->q3};
  std::array<std::uint64_t, 3> n_i{};
  for (int i = 1; i <= 3; ++i) {
    const auto r = kuroda_radicands(i, t);
    n_i[i - 1] = kuroda_h2(qs[i - 1], {h2(r[0]), h2(r[1]), h2(r[2])});
  }
  ev.n_i = n_i;
  ev.thm4 = thm4_cyclicity(ev.n, n_i[0], n_i[1], n_i[2]);

  if (!scholz_norm_check(*ev.profile.t1, *ev.profile.t2, *ev.norm_p1p2, h2(p1 * p2))) {
    flag("Scholz: t1, t2 disagree with N(eps_p1p2) and h2(p1 p2)");
  }

  CriteriaInputs in;
  in.delta = ev.delta->delta;
  in.z_square = *ev.z_square;
  in.alpha = ev.profile.alpha;
  in.s4 = ev.profile.s4;
  in.t1 = ev.profile.t1;
  in.t2 = ev.profile.t2;
  const CriteriaOutcome out = hilbert_cl2_criteria(v.case_tag, in);
  v.hilbert_cl2 = out.verdict;
  ev.basis = std::string(to_string(v.case_tag)) + ", delta=" + std::string(to_string(in.delta)) + ": " + out.basis;

  const bool thm4_cyclic = *ev.thm4 == Thm4Pattern::CyclicNonElementary;
  if (thm4_cyclic != (v.hilbert_cl2 == HilbertCl2::CyclicNonElementary)) {
    flag("criteria verdict " + std::string(to_string(v.hilbert_cl2)) + " vs class-number pattern " +
         std::string(to_string(*ev.thm4)));
  }
  if (v.hilbert_cl2 == HilbertCl2::Order2) {
    if (!(n_i[0] == ev.n && n_i[1] == ev.n && n_i[2] == ev.n)) flag("order 2 but some h2(K_i) != h2(k)");
    if (std::count(qs.begin(), qs.end(), 2) < 2) flag("order 2 but fewer than two unit indices equal 2");
  }
  return v;
}

}  // namespace towerlab
