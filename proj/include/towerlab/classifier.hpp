#pragma once

// Decision pipeline for k = Q(sqrt(2 p1 p2 q)): case dispatch from residue
// symbols, Kuroda 2-class numbers of the unramified quadratic extensions,
// metacyclicity of Gal(k_2^(2)/k), and the structure verdict on Cl_2(k_2^(1)).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "towerlab/kaplan.hpp"
#include "towerlab/pell.hpp"
#include "towerlab/triple.hpp"
#include "towerlab/units.hpp"

namespace towerlab {

enum class GType { Abelian, Modular, MetacyclicNonAbelianNonModular, NonMetacyclic, OutOfScope };
enum class HilbertCl2 { Order2, CyclicNonElementary, RankAtLeastTwo, OutOfScope };
enum class Thm4Pattern { CyclicNonElementary, NotNonElementaryCyclic };

std::string_view to_string(GType g) noexcept;
std::string_view to_string(HilbertCl2 h) noexcept;
std::string_view to_string(Thm4Pattern p) noexcept;

/// 2-ranks of Cl_2(K1), Cl_2(K2), Cl_2(K3).
struct RankProfile {
  int r1 = 0;
  int r2 = 0;
  int r3 = 0;
  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

/// Case tag of a symbol profile, reading the asymmetric conditions up to
/// exchanging p1 and p2. Throws UnclassifiableProfile (never expected).
CaseTag case_of(const SymbolProfile& profile);

/// Orders (p1, p2) so the case conditions hold literally: Case1 needs
/// (q/p1) = 1, Case3/Case4 need (2/p1) = 1. Symmetric cases get p1 < p2.
PrimeTriple normalize_roles(const PrimeTriple& t);

/// Radicands of the three quadratic subfields of K_i (i = 1, 2, 3).
std::array<std::uint64_t, 3> kuroda_radicands(int i, const PrimeTriple& t);

/// h_2(K) = q_i * h_2(k_a) h_2(k_b) h_2(k_c) / 4 for a real biquadratic K.
/// Throws NonIntegralClassNumber unless the result is an integral power of 2.
std::uint64_t kuroda_h2(int q_i, const std::array<std::uint64_t, 3>& subfield_h2);
std::uint64_t kuroda_h2(int i, int q_i, const PrimeTriple& t);

/// Cyclic non-elementary iff some n_i >= 2n while the other two equal n.
Thm4Pattern thm4_cyclicity(std::uint64_t n, std::uint64_t n1, std::uint64_t n2, std::uint64_t n3);

/// Metacyclic iff (q/p1) = (q/p2) = (2/p1) = (2/p2) = -1; in that family
/// (p1/p2) = 1 gives the non-abelian non-modular type, otherwise modular or
/// abelian as 2 p1 p2 (x + 1) is a square or not. OutOfScope unless the
/// 4-rank is 1.
GType metacyclic_type(const SymbolProfile& profile, const PrimeTriple& t);

std::optional<RankProfile> rank_profile(CaseTag c, const SymbolProfile& profile);

struct CriteriaInputs {
  DeltaSymbol delta = DeltaSymbol::One;
  bool z_square = false;  // delta (z +- 1) is a square (see z_condition)
  std::optional<Sign> alpha;
  std::optional<Sign> s4;
  std::optional<Sign> t1;
  std::optional<Sign> t2;
};

struct CriteriaOutcome {
  HilbertCl2 verdict = HilbertCl2::OutOfScope;
  std::string basis;
};

/// Case2 is never cyclic. For Case1/3/4: order 2 when the three order-2
/// conditions hold, cyclic non-elementary under condition I or II, otherwise
/// rank at least 2. Throws CriteriaInputMissing if a needed symbol is undefined.
CriteriaOutcome hilbert_cl2_criteria(CaseTag c, const CriteriaInputs& in);
inline HilbertCl2 hilbert_cl2_verdict(CaseTag c, const CriteriaInputs& in) {
  return hilbert_cl2_criteria(c, in).verdict;
}

struct Evidence {
  SymbolProfile profile;
  int four_rank_redei = 0;
  std::vector<std::uint64_t> narrow_cl2;
  std::optional<KaplanData> kaplan;
  std::optional<SquareClassPair> x_classes;
  std::optional<SquareClassPair> z_classes;
  std::optional<ResolvedDelta> delta;
  std::optional<bool> z_square;
  std::optional<Sign> norm_p1p2;
  std::optional<UnitIndices> units;
  std::uint64_t n = 0;
  std::optional<std::array<std::uint64_t, 3>> n_i;
  std::map<std::uint64_t, std::uint64_t> subfield_h2;  // radicand -> h_2
  std::optional<Thm4Pattern> thm4;
  std::optional<RankProfile> ranks;
  std::string basis;
  std::vector<std::string> flags;  // InternalInconsistency reports
};

struct ClassificationVerdict {
  explicit ClassificationVerdict(const PrimeTriple& t) : triple(t) {}

  PrimeTriple triple;
  CaseTag case_tag = CaseTag::TypeTwoTwo;
  std::vector<std::uint64_t> cl2_k;
  GType g_type = GType::OutOfScope;
  HilbertCl2 hilbert_cl2 = HilbertCl2::OutOfScope;
  Evidence evidence;

  std::uint64_t d() const noexcept { return triple.d(); }
  bool inconsistent() const noexcept { return !evidence.flags.empty(); }
};

/// Full pipeline. The input order of p1, p2 is irrelevant; roles are
/// normalised first. Throws InvalidTriple for bad input.
ClassificationVerdict classify(const PrimeTriple& t);
ClassificationVerdict classify(std::uint64_t p1, std::uint64_t p2, std::uint64_t q);

}  // namespace towerlab
