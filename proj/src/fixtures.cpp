#include <algorithm>
#include <array>
#include <string>

#include "towerlab/errors.hpp"
#include "towerlab/harness.hpp"

namespace towerlab {

namespace {

using D = DeltaSymbol;

FixtureRow row(CaseTag c, DeltaSymbol delta, std::uint64_t d, std::uint64_t p1, std::uint64_t p2, std::uint64_t q,
               std::array<int, 7> qas, std::array<std::uint64_t, 5> ns, std::uint64_t cyc) {
  TableColumns t;
  t.q1 = qas[0];
  t.q2 = qas[1];
  t.q3 = qas[2];
  t.alpha = sign_from_int(qas[3]);
  t.s4 = sign_from_int(qas[4]);
  t.t1 = sign_from_int(qas[5]);
  t.t2 = sign_from_int(qas[6]);
  t.n = ns[0];
  t.n1 = ns[1];
  t.n2 = ns[2];
  t.n3 = ns[3];
  t.q0 = ns[4];
  return {d, p1, p2, q, c, delta, t, {cyc}};
}

std::vector<FixtureRow> build() {
  const CaseTag C1 = CaseTag::Case1, C3 = CaseTag::Case3, C4 = CaseTag::Case4;
  std::vector<FixtureRow> rows{
      // Case 1, x +- 1 a square, t1 = t2.
      row(C1, D::One, 38982, 73, 89, 3, {2, 1, 2, -1, -1, 1, 1}, {8, 8, 8, 16, 16}, 4),
      row(C1, D::One, 60006, 73, 137, 3, {2, 1, 2, -1, -1, 1, 1}, {8, 8, 8, 64, 16}, 16),
      row(C1, D::One, 298862, 73, 89, 23, {2, 1, 2, -1, -1, 1, 1}, {8, 8, 8, 16, 16}, 12),
      // Case 1, p1 (x +- 1) a square, t1 != t2.
      row(C1, D::P1, 51798, 97, 89, 3, {2, 1, 2, -1, 1, 1, -1}, {8, 8, 8, 8, 16}, 2),
      row(C1, D::P1, 64862, 113, 41, 7, {2, 1, 2, -1, 1, 1, -1}, {8, 8, 8, 8, 16}, 6),
      row(C1, D::P1, 113734, 73, 41, 19, {2, 1, 2, 1, -1, -1, 1}, {8, 8, 8, 8, 16}, 6),
      // Case 3, 2 p2 (x +- 1) a square.
      row(C3, D::TwoP2, 17630, 41, 5, 43, {2, 2, 2, 1, 1, 1, -1}, {8, 8, 32, 8, 32}, 8),
      row(C3, D::TwoP2, 29614, 17, 13, 67, {2, 2, 2, 1, -1, -1, 1}, {8, 8, 16, 8, 32}, 4),
      row(C3, D::TwoP2, 34238, 17, 53, 19, {2, 2, 1, 1, 1, -1, -1}, {8, 8, 32, 8, 16}, 8),
      row(C3, D::TwoP2, 41830, 89, 5, 47, {2, 2, 1, -1, -1, -1, -1}, {16, 16, 32, 16, 16}, 4),
      row(C3, D::TwoP2, 59630, 89, 5, 67, {2, 2, 1, -1, 1, -1, -1}, {8, 8, 16, 8, 16}, 4),
      row(C3, D::TwoP2, 69782, 41, 37, 23, {2, 2, 2, 1, -1, -1, 1}, {8, 8, 16, 8, 32}, 4),
      row(C3, D::TwoP2, 91078, 113, 13, 31, {2, 2, 2, -1, -1, 1, -1}, {16, 16, 32, 16, 32}, 12),
      // Case 3, q (x +- 1) a square, t1 != t2.
      row(C3, D::Q, 9430, 41, 5, 23, {2, 1, 2, 1, -1, 1, -1}, {16, 16, 16, 16, 16}, 2),
      row(C3, D::Q, 20774, 17, 13, 47, {2, 1, 2, 1, -1, -1, 1}, {8, 8, 8, 8, 16}, 2),
      row(C3, D::Q, 94054, 41, 37, 31, {2, 1, 2, 1, -1, -1, 1}, {8, 8, 8, 8, 16}, 2),
      row(C3, D::Q, 102638, 73, 37, 19, {2, 1, 2, 1, -1, -1, 1}, {8, 8, 8, 8, 16}, 6),
      // Case 4, p2 (x +- 1) a square, cyclicity condition II.
      row(C4, D::P2, 84422, 17, 13, 191, {2, 2, 2, 1, -1, -1, 1}, {8, 8, 16, 8, 32}, 12),
      row(C4, D::P2, 113102, 97, 53, 11, {2, 1, 2, 1, 1, 1, -1}, {8, 8, 16, 8, 16}, 4),
      row(C4, D::P2, 123710, 89, 5, 139, {2, 1, 1, 1, 1, -1, -1}, {8, 8, 16, 8, 16}, 8),
      row(C4, D::P2, 139334, 233, 13, 23, {2, 1, 1, 1, 1, -1, -1}, {8, 8, 16, 8, 16}, 8),
      row(C4, D::P2, 159310, 89, 5, 179, {2, 1, 1, 1, 1, -1, -1}, {8, 8, 32, 8, 16}, 16),
      // Case 4, p2 (x +- 1) a square, t1 != t2.
      row(C4, D::P2, 45526, 17, 13, 103, {2, 1, 2, -1, -1, -1, 1}, {8, 8, 8, 8, 16}, 6),
      row(C4, D::P2, 53710, 41, 5, 131, {2, 1, 2, -1, 1, 1, -1}, {8, 8, 8, 8, 16}, 2),
      row(C4, D::P2, 56134, 17, 13, 127, {2, 1, 2, -1, 1, -1, 1}, {16, 16, 16, 16, 16}, 6),
      row(C4, D::P2, 63438, 97, 109, 3, {2, 1, 2, -1, 1, 1, -1}, {8, 8, 8, 8, 16}, 2),
  };
  rows.push_back({47158, 73, 17, 19, CaseTag::Case2, std::nullopt, std::nullopt, {2, 4}});
  rows.push_back({59942, 17, 41, 43, CaseTag::Case2, std::nullopt, std::nullopt, {2, 4}});
  return rows;
}

template <typename T>
void expect(std::vector<std::string>& out, const char* column, const T& want, const T& got) {
  if (!(want == got)) {
    out.push_back(std::string(column) + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
  }
}

void expect_sign(std::vector<std::string>& out, const char* column, Sign want, std::optional<Sign> got) {
  if (!got) {
    out.push_back(std::string(column) + ": expected " + std::to_string(to_int(want)) + ", got undefined");
    return;
  }
  expect(out, column, to_int(want), to_int(*got));
}

}  // namespace

const std::vector<FixtureRow>& fixtures() {
  static const std::vector<FixtureRow> rows = build();
  return rows;
}

HilbertCl2 expected_verdict(const std::vector<std::uint64_t>& c) {
  std::vector<std::uint64_t> parts;
  for (std::uint64_t v : c) {
    if (const std::uint64_t t = v & (~v + 1); t > 1) parts.push_back(t);
  }
  if (parts.size() >= 2) return HilbertCl2::RankAtLeastTwo;
  if (parts.size() == 1) return parts[0] == 2 ? HilbertCl2::Order2 : HilbertCl2::CyclicNonElementary;
  return HilbertCl2::OutOfScope;
}

RowCheck check_fixture(const FixtureRow& r) {
  RowCheck out;
  out.d = r.d;
  auto& mm = out.mismatches;
  try {
    ClassificationVerdict v = classify(r.p1, r.p2, r.q);
    const Evidence& ev = v.evidence;
    expect(mm, "d", r.d, v.d());
    if (v.case_tag != r.case_tag) {
      mm.push_back("case: expected " + std::string(to_string(r.case_tag)) + ", got " +
                   std::string(to_string(v.case_tag)));
    }
    if (r.case_tag != CaseTag::Case2) expect(mm, "p1", r.p1, v.triple.p1.value());
    if (r.delta && (!ev.delta || ev.delta->delta != *r.delta)) {
      mm.push_back("delta: expected " + std::string(to_string(*r.delta)) + ", got " +
                   (ev.delta ? std::string(to_string(ev.delta->delta)) : "none"));
    }
    if (r.columns) {
      const TableColumns& t = *r.columns;
      if (!ev.units || !ev.n_i) {
        mm.push_back("q1..n3: not computed");
      } else {
        expect(mm, "q1", t.q1, ev.units->q1);
        expect(mm, "q2", t.q2, ev.units->q2);
        expect(mm, "q3", t.q3, ev.units->q3);
        expect_sign(mm, "alpha", t.alpha, ev.profile.alpha);
        expect_sign(mm, "s", t.s4, ev.profile.s4);
        expect_sign(mm, "t1", t.t1, ev.profile.t1);
        expect_sign(mm, "t2", t.t2, ev.profile.t2);
        expect(mm, "n", t.n, ev.n);
        expect(mm, "n1", t.n1, (*ev.n_i)[0]);
        expect(mm, "n2", t.n2, (*ev.n_i)[1]);
        expect(mm, "n3", t.n3, (*ev.n_i)[2]);
      }
    }
    const HilbertCl2 want = expected_verdict(r.c);
    if (v.hilbert_cl2 != want) {
      mm.push_back("c: expected " + std::string(to_string(want)) + ", got " + std::string(to_string(v.hilbert_cl2)));
    }
    for (const auto& f : ev.flags) mm.push_back(f);
    out.verdict = std::move(v);
  } catch (const Error& e) {
    mm.emplace_back(e.what());
  }
  return out;
}

bool FixtureReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.ok(); });
}

FixtureReport verify_fixtures() {
  FixtureReport report;
  for (const FixtureRow& r : fixtures()) report.rows.push_back(check_fixture(r));
  return report;
}

}  // namespace towerlab
