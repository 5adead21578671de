// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "towerlab/errors.hpp"
#include "towerlab/formclass.hpp"
#include "towerlab/harness.hpp"
#include "towerlab/kaplan.hpp"
#include "towerlab/pell.hpp"
#include "towerlab/redei.hpp"

using namespace towerlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    pass = false;
    if (failures.size() < 10) failures.push_back(std::move(msg));
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::uint64_t> primes_mod4(std::uint64_t limit, std::uint64_t residue) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(limit - 1)) {
    if (p % 4 == residue) out.push_back(p);
  }
  return out;
}

bool is_tabulated(const FixtureRow& r) { return r.columns.has_value(); }

Outcome fixture_reproduction() {
  Outcome o;
  const auto t0 = Clock::now();
  int rows = 0;
  for (const FixtureRow& r : fixtures()) {
    if (!is_tabulated(r)) continue;
    ++rows;
    const RowCheck c = check_fixture(r);
    for (const auto& m : c.mismatches) o.fail("d=" + std::to_string(r.d) + " " + m);
  }
  const double secs = seconds_since(t0);
  if (rows != 26) o.fail("expected 26 tabulated rows, found " + std::to_string(rows));
  if (secs >= 120) o.fail("took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << rows << " rows in " << secs << " s";
  o.detail = os.str();
  return o;
}

Outcome verdict_consistency() {
  Outcome o;
  int rows = 0;
  for (const FixtureRow& r : fixtures()) {
    ++rows;
    const ClassificationVerdict v = classify(r.p1, r.p2, r.q);
    const HilbertCl2 want = is_tabulated(r) ? expected_verdict(r.c) : HilbertCl2::RankAtLeastTwo;
    if (v.hilbert_cl2 != want) {
      o.fail("d=" + std::to_string(r.d) + " expected " + std::string(to_string(want)) + ", got " +
             std::string(to_string(v.hilbert_cl2)));
    }
    if (v.inconsistent()) o.fail("d=" + std::to_string(r.d) + " " + v.evidence.flags.front());
  }
  o.detail = std::to_string(rows) + " rows";
  return o;
}

int four_rank_of_case(CaseTag c) {
  if (c == CaseTag::TypeTwoTwo) return 0;
  if (c == CaseTag::FourRankTwo) return 2;
  return 1;
}

Outcome redei_symbol_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto ps = primes_mod4(300, 1);
  const auto qs = primes_mod4(300, 3);
  long triples = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      for (std::uint64_t q : qs) {
        ++triples;
        const PrimeTriple t = make_triple(ps[i], ps[j], q);
        const CaseTag c = case_of(symbol_profile(t));
        const int r4 = four_rank(static_cast<std::int64_t>(t.d()));
        if (r4 != four_rank_of_case(c)) {
          o.fail("d=" + std::to_string(t.d()) + " case " + std::string(to_string(c)) + " but Redei 4-rank " +
                 std::to_string(r4));
        }
      }
    }
  }
  std::ostringstream os;
  os << triples << " triples in " << seconds_since(t0) << " s";
  o.detail = os.str();
  return o;
}

Outcome kaplan_soundness() {
  Outcome o;
  int pairs = 0;
  for (std::uint64_t p1 : primes_up_to(499)) {
    if (p1 % 8 != 1) continue;
    for (std::uint64_t q : primes_mod4(100, 3)) {
      const OddPrime P(p1), Q(q);
      if (legendre_symbol(Int(static_cast<unsigned long>(q)), P) != 1) continue;
      ++pairs;
      const std::uint64_t h2 = h2_wide(2 * p1 * q);
      const bool predicted_4 = alpha_symbol(P, Q) == Sign::Minus ||
                               quartic_symbol(Int(static_cast<unsigned long>(2 * q)), P) == Sign::Minus;
      if (h2 < 4 || (h2 == 4) != predicted_4) {
        o.fail("p1=" + std::to_string(p1) + " q=" + std::to_string(q) + " h2=" + std::to_string(h2) +
               (predicted_4 ? " predicted 4" : " predicted >= 8"));
      }
    }
  }
  o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome pell_exactness() {
  Outcome o;
  int checked = 0, minimal = 0;
  for (std::uint64_t m = 2; m < 2000; ++m) {
    if (!oracle::squarefree(m)) continue;
    const Int M(static_cast<unsigned long>(m));
    const FundamentalUnit u = fundamental_unit(m);
    const Int norm = u.x_num * u.x_num - M * u.y_num * u.y_num;
    if (norm != to_int(u.norm) * u.denom * u.denom) o.fail("m=" + std::to_string(m) + " unit norm equation");
    if (u.norm != Sign::Plus) continue;
    ++checked;
    const PellSolution s = pell_xy(m);
    if (s.x * s.x - M * s.y * s.y != 1) o.fail("m=" + std::to_string(m) + " x^2 - m y^2 != 1");
    const auto brute = oracle::pell_brute(m, 10'000);
    if (brute) {
      ++minimal;
      if (brute->first != s.x || brute->second != s.y) o.fail("m=" + std::to_string(m) + " not minimal");
    } else if (s.y <= 10'000) {
      o.fail("m=" + std::to_string(m) + " brute force missed y=" + s.y.get_str());
    }
  }
  o.detail = std::to_string(checked) + " norm +1 radicands, " + std::to_string(minimal) + " compared to brute force";
  return o;
}

Outcome genus_two_rank() {
  Outcome o;
  std::mt19937_64 rng(20240531);
  std::uniform_int_distribution<std::uint64_t> dist(2, 999'999);
  int done = 0;
  while (done < 200) {
    const std::uint64_t m = dist(rng);
    if (!oracle::squarefree(m)) continue;
    const std::int64_t D = field_discriminant(static_cast<std::int64_t>(m));
    if (D >= 1'000'000) continue;
    ++done;
    const int genus = static_cast<int>(prime_discriminants(static_cast<std::int64_t>(m)).entries.size()) - 1;
    const int distinct = static_cast<int>(oracle::prime_factors(static_cast<std::uint64_t>(D)).size()) - 1;
    const int rank = narrow_class_group(D).two_rank();
    if (rank != genus || genus != distinct) {
      o.fail("D=" + std::to_string(D) + " 2-rank " + std::to_string(rank) + ", genus " + std::to_string(genus));
    }
  }
  o.detail = std::to_string(done) + " discriminants";
  return o;
}

Outcome scholz_consistency() {
  Outcome o;
  const auto ps = primes_mod4(300, 1);
  int pairs = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const OddPrime p1(ps[i]), p2(ps[j]);
      if (legendre_symbol(Int(static_cast<unsigned long>(ps[i])), p2) != 1) continue;
      ++pairs;
      const Sign t1 = quartic_symbol(Int(static_cast<unsigned long>(ps[i])), p2);
      const Sign t2 = quartic_symbol(Int(static_cast<unsigned long>(ps[j])), p1);
      const std::uint64_t m = ps[i] * ps[j];
      const Sign norm = fundamental_unit(m).norm;
      const std::uint64_t h2 = h2_wide(m);
      if (!scholz_norm_check(t1, t2, norm, h2)) {
        o.fail("p1=" + std::to_string(ps[i]) + " p2=" + std::to_string(ps[j]) + " h2=" + std::to_string(h2) +
               " N=" + std::to_string(to_int(norm)));
      }
    }
  }
  o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome order_two_conditions() {
  Outcome o;
  int order2 = 0;
  for (const FixtureRow& r : fixtures()) {
    const ClassificationVerdict v = classify(r.p1, r.p2, r.q);
    if (v.hilbert_cl2 != HilbertCl2::Order2) continue;
    ++order2;
    const Evidence& ev = v.evidence;
    const std::string tag = "d=" + std::to_string(r.d);
    if (!ev.n_i || !ev.units) {
      o.fail(tag + " missing unit data");
      continue;
    }
    for (std::uint64_t ni : *ev.n_i) {
      if (ni != ev.n) o.fail(tag + " n_i=" + std::to_string(ni) + " != n=" + std::to_string(ev.n));
    }
    const int twos = (ev.units->q1 == 2) + (ev.units->q2 == 2) + (ev.units->q3 == 2);
    if (twos < 2) o.fail(tag + " only " + std::to_string(twos) + " unit indices equal 2");
  }
  if (order2 == 0) o.fail("no Order2 verdicts among the fixtures");
  o.detail = std::to_string(order2) + " Order2 rows";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fixture reproduction", fixture_reproduction},
      {"verdict consistency", verdict_consistency},
      {"Redei-symbol equivalence", redei_symbol_equivalence},
      {"Kaplan criterion soundness", kaplan_soundness},
      {"Pell exactness and minimality", pell_exactness},
      {"genus-theory 2-rank", genus_two_rank},
      {"Scholz consistency", scholz_consistency},
      {"Order2 necessary conditions", order_two_conditions},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << o.detail << ")\n";
    for (const auto& f : o.failures) std::cout << "  " << f << "\n";
  }
  return all ? 0 : 1;
}
