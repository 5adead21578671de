#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "towerlab/errors.hpp"
#include "towerlab/formclass.hpp"
#include "towerlab/pell.hpp"

using namespace towerlab;

namespace {

long double log_unit(const FundamentalUnit& u) {
  mpf_class v(u.x_num, 512);
  v += mpf_class(u.y_num, 512) * sqrt(mpf_class(static_cast<unsigned long>(u.m), 512));
  long exp = 0;
  const double mant = mpf_get_d_2exp(&exp, v.get_mpf_t());
  return std::log(static_cast<long double>(mant)) + exp * std::log(2.0L) - std::log(static_cast<long double>(u.denom));
}

// h+ from the analytic class number formula and the unit norm.
std::uint64_t narrow_class_number_oracle(std::uint64_t m) {
  const FundamentalUnit u = fundamental_unit(m);
  const std::uint64_t h = oracle::analytic_class_number(field_discriminant(static_cast<std::int64_t>(m)), log_unit(u));
  return u.norm == Sign::Plus ? 2 * h : h;
}

std::uint64_t two_part(std::uint64_t n) { return n & (~n + 1); }

bool squarefree_m(std::uint64_t m) { return m > 1 && oracle::squarefree(m); }

}  // namespace

TEST_SUITE("formclass") {
  TEST_CASE("reduced form cycles") {
    CHECK(reduced_form_cycles(8).size() == 1);
    CHECK(reduced_form_cycles(40).size() == 2);
    // Q(sqrt 15): h = 2 and N(4 + sqrt 15) = +1, so h+ = 4.
    CHECK(reduced_form_cycles(60).size() == 4);
    CHECK(narrow_class_number_oracle(15) == 4);
    for (const auto& cycle : reduced_form_cycles(40)) {
      for (const auto& f : cycle) {
        CHECK(f.is_reduced());
        CHECK(f.discriminant() == 40);
      }
    }
    CHECK_THROWS_AS(reduced_form_cycles(16), Error);
    CHECK_THROWS_AS(reduced_form_cycles(-4), Error);
    CHECK_THROWS_AS(reduced_form_cycles(7), Error);
  }

  TEST_CASE("rho preserves the discriminant and maps reduced to reduced") {
    for (std::int64_t D : {5, 8, 12, 13, 40, 60, 145, 1560, 155928}) {
      for (const QuadForm& f : enumerate_reduced_forms(D)) {
        const QuadForm g = rho(f);
        CHECK(g.discriminant() == D);
        CHECK(g.is_reduced());
      }
    }
  }

  TEST_CASE("class group examples") {
    const NarrowClassGroup g40(40);
    CHECK(g40.elementary_divisors() == std::vector<std::uint64_t>{2});
    const NarrowClassGroup g(155928);
    CHECK(g.two_sylow() == std::vector<std::uint64_t>{2, 2, 4});
    CHECK(fundamental_unit(6497).norm == Sign::Plus);
    CHECK(NarrowClassGroup(6497).two_part_order() == 8);
    CHECK(h2_wide(534) == 2);
    CHECK(h2_wide(438) == 4);
    CHECK(h2_wide(73) == 1);
    CHECK(h2_wide(6497) == 4);
    CHECK(cl2_invariants(38982) == std::vector<std::uint64_t>{2, 4});
    CHECK(cl2_invariants(41830) == std::vector<std::uint64_t>{2, 8});
    CHECK(cl2_invariants(534) == std::vector<std::uint64_t>{2});
    CHECK_THROWS_AS(cl2_invariants(6497), Error);  // 73 * 89 has no prime = 3 mod 4
  }

  TEST_CASE("h+ agrees with the analytic class number formula") {
    for (std::uint64_t m = 2; m < 700; ++m) {
      if (!squarefree_m(m)) continue;
      const NarrowClassGroup g(field_discriminant(static_cast<std::int64_t>(m)));
      INFO("m=" << m);
      CHECK(g.order() == narrow_class_number_oracle(m));
    }
    for (std::uint64_t m : {38982ull, 6497ull, 534ull, 438ull, 2210ull, 3570ull}) {
      INFO("m=" << m);
      const std::int64_t D = field_discriminant(static_cast<std::int64_t>(m));
      CHECK(NarrowClassGroup(D).order() == narrow_class_number_oracle(m));
    }
  }

  TEST_CASE("h+ = h * 2^[norm = +1] on random m") {
    std::mt19937_64 rng(5);
    int tested = 0;
    while (tested < 200) {
      const std::uint64_t m = 2 + rng() % 3000;
      if (!squarefree_m(m)) continue;
      ++tested;
      const NarrowClassGroup g(field_discriminant(static_cast<std::int64_t>(m)));
      const FundamentalUnit u = fundamental_unit(m);
      const std::uint64_t h = oracle::analytic_class_number(g.discriminant(), log_unit(u));
      CHECK(g.order() == (u.norm == Sign::Plus ? 2 * h : h));
      CHECK(h2_wide(m) == two_part(h));
    }
  }

  TEST_CASE("genus theory: 2-rank = number of prime discriminants - 1") {
    std::mt19937_64 rng(6);
    int tested = 0;
    while (tested < 200) {
      const std::uint64_t m = 2 + rng() % 250000;
      if (!squarefree_m(m)) continue;
      const std::int64_t D = field_discriminant(static_cast<std::int64_t>(m));
      if (D >= 1000000) continue;
      ++tested;
      const std::size_t t = oracle::prime_factors(static_cast<std::uint64_t>(D)).size();
      CHECK(NarrowClassGroup(D).two_rank() == static_cast<int>(t) - 1);
    }
  }

  TEST_CASE("composition is a group law on classes") {
    for (std::int64_t D = 5; D < 5000; ++D) {
      if (D % 4 != 0 && D % 4 != 1) continue;
      const std::int64_t m = D % 4 == 0 ? D / 4 : D;
      if (D % 4 == 0 && m % 4 != 2 && m % 4 != 3) continue;
      if (!squarefree_m(static_cast<std::uint64_t>(m))) continue;
      const NarrowClassGroup g(D);
      const std::size_t h = g.order();
      for (std::size_t i = 0; i < h; ++i) {
        CHECK(g.multiply(i, g.identity()) == i);
        const QuadForm& f = g.cycle_representatives()[i];
        CHECK(g.multiply(i, g.class_of({f.a, -f.b, f.c})) == g.identity());
        for (std::size_t j = 0; j < h; ++j) {
          CHECK(g.multiply(i, j) == g.multiply(j, i));
          for (std::size_t k = 0; k < h && h <= 8; ++k) {
            CHECK(g.multiply(g.multiply(i, j), k) == g.multiply(i, g.multiply(j, k)));
          }
        }
      }
    }
  }

  TEST_CASE("cl2 relates to the narrow group and to h2_wide") {
    for (std::uint64_t m : {38982ull, 60006ull, 17630ull, 41830ull, 9430ull, 56134ull, 534ull, 438ull, 47158ull}) {
      const auto cl2 = cl2_invariants(m);
      std::uint64_t prod = 1;
      for (auto v : cl2) prod *= v;
      CHECK(prod == h2_wide(m));
      auto merged = cl2;
      merged.insert(merged.begin(), 2);
      std::sort(merged.begin(), merged.end());
      CHECK(merged == narrow_class_group(field_discriminant(static_cast<std::int64_t>(m))).two_sylow());
    }
  }
}
