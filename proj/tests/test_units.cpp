#include <doctest.h>

#include "towerlab/errors.hpp"
#include "towerlab/pell.hpp"
#include "towerlab/units.hpp"

using namespace towerlab;

TEST_SUITE("units") {
  TEST_CASE("delta sets") {
    using D = DeltaSymbol;
    CHECK(delta_set(CaseTag::Case1) == std::array<D, 3>{D::One, D::P1, D::TwoP1});
    CHECK(delta_set(CaseTag::Case3) == std::array<D, 3>{D::TwoP1, D::TwoP2, D::Q});
    CHECK(delta_set(CaseTag::Case4) == std::array<D, 3>{D::TwoP1, D::P2, D::TwoQ});
    try {
      delta_set(CaseTag::Case2);
      FAIL("expected NoDeltaSetForCase2");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NoDeltaSetForCase2);
    }
    CHECK_THROWS_AS(delta_set(CaseTag::TypeTwoTwo), Error);
  }

  TEST_CASE("resolve_delta examples") {
    const PrimeTriple t1 = make_triple(73, 89, 3);
    CHECK(resolve_delta(CaseTag::Case1, square_class_pair(t1.d()), t1).delta == DeltaSymbol::One);

    const PrimeTriple t3 = make_triple(41, 5, 43);
    const ResolvedDelta r3 = resolve_delta(CaseTag::Case3, square_class_pair(t3.d()), t3);
    CHECK(r3.delta == DeltaSymbol::TwoP2);
    CHECK(delta_value(r3.delta, t3) == 10);

    const PrimeTriple t4 = make_triple(97, 53, 11);
    const ResolvedDelta r4 = resolve_delta(CaseTag::Case4, square_class_pair(t4.d()), t4);
    CHECK(r4.delta == DeltaSymbol::P2);
    CHECK(delta_value(r4.delta, t4) == 53);

    const SquareClassPair outside{3, 2 * 73 * 89};
    try {
      resolve_delta(CaseTag::Case1, outside, t1);
      FAIL("expected DeltaNotInLemmaSet");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DeltaNotInLemmaSet);
    }
  }

  TEST_CASE("unit_indices examples") {
    const PrimeTriple t1 = make_triple(73, 89, 3);
    const SquareClassPair z1 = square_class_pair(2 * 73 * 3);
    CHECK_FALSE(z1.contains(1));
    for (Sign norm : {Sign::Plus, Sign::Minus}) {
      const UnitIndices u = unit_indices(CaseTag::Case1, DeltaSymbol::One, z1, norm, t1);
      CHECK(u.q1 == 2);
      CHECK(u.q2 == 1);
      CHECK(u.q3 == 2);
    }
    const UnitIndices u1 = unit_indices(CaseTag::Case1, DeltaSymbol::One, z1, Sign::Plus, t1);
    CHECK(u1.fsu[0].to_string() == "{eps_p1, eps_2p2q, sqrt(eps_2p2q*eps_2p1p2q)}");
    CHECK(u1.fsu[2].to_string() == "{eps_2q, eps_p1p2, sqrt(eps_2q*eps_2p1p2q)}");

    const PrimeTriple t3 = make_triple(41, 5, 43);
    const SquareClassPair z3 = square_class_pair(2 * 41 * 43);
    UnitIndices u = unit_indices(CaseTag::Case3, DeltaSymbol::TwoP2, z3, Sign::Plus, t3);
    CHECK((u.q1 == 2 && u.q2 == 2 && u.q3 == 2));
    u = unit_indices(CaseTag::Case3, DeltaSymbol::TwoP2, z3, Sign::Minus, t3);
    CHECK((u.q1 == 2 && u.q2 == 2 && u.q3 == 1));

    try {
      unit_indices(CaseTag::Case3, DeltaSymbol::One, z3, Sign::Plus, t3);
      FAIL("expected LemmaSubcaseMissing");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::LemmaSubcaseMissing);
    }
  }

  TEST_CASE("every lemma sub-case: q1 = 2, at most one root per field") {
    const PrimeTriple t = make_triple(73, 89, 3);
    for (CaseTag c : {CaseTag::Case1, CaseTag::Case3, CaseTag::Case4}) {
      for (DeltaSymbol d : delta_set(c)) {
        for (Sign norm : {Sign::Plus, Sign::Minus}) {
          for (std::uint64_t zf : {1ull, 73ull, 146ull, 3ull, 6ull, 89ull, 178ull, 219ull}) {
            const SquareClassPair z{zf, std::uint64_t{2 * 73 * 3} / (zf % 2 == 0 ? 2 : 1)};
            const UnitIndices u = unit_indices(c, d, z, norm, t);
            CHECK(u.q1 == 2);
            for (int i = 0; i < 3; ++i) {
              int roots = 0;
              for (const auto& g : u.fsu[i].generators) roots += g.root ? 1 : 0;
              CHECK(roots <= 1);
              CHECK(u.fsu[i].unit_index() == (roots == 1 ? 2 : 1));
            }
            CHECK(u.fsu[1].unit_index() == u.q2);
            CHECK(u.fsu[2].unit_index() == u.q3);
          }
        }
      }
    }
  }

  TEST_CASE("z_condition uses z -+ 1 itself for Case4 with delta = p2") {
    const PrimeTriple t = make_triple(97, 53, 11);
    const SquareClassPair with_one{1, 2 * 97 * 11};
    CHECK(z_condition(CaseTag::Case4, DeltaSymbol::P2, with_one, t));
    CHECK_FALSE(z_condition(CaseTag::Case4, DeltaSymbol::TwoP1, with_one, t));
    const SquareClassPair with_p2{53, 2};
    CHECK_FALSE(z_condition(CaseTag::Case4, DeltaSymbol::P2, with_p2, t));
    CHECK(z_condition(CaseTag::Case1, DeltaSymbol::TwoP1, SquareClassPair{2 * 97, 11}, t));
  }

  TEST_CASE("scholz_norm_check") {
    CHECK(scholz_norm_check(Sign::Plus, Sign::Minus, Sign::Plus, 2));
    CHECK(scholz_norm_check(Sign::Plus, Sign::Plus, Sign::Plus, 4));
    CHECK_FALSE(scholz_norm_check(Sign::Plus, Sign::Minus, Sign::Minus, 2));
  }
}
