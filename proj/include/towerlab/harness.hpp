#pragma once

// Reference tables, batch search, output rendering and the external CAS
// cross-check.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "towerlab/classifier.hpp"

namespace towerlab {

struct TableColumns {
  int q1 = 0, q2 = 0, q3 = 0;
  Sign alpha = Sign::Plus, s4 = Sign::Plus, t1 = Sign::Plus, t2 = Sign::Plus;
  std::uint64_t n = 0, n1 = 0, n2 = 0, n3 = 0;
  std::uint64_t q0 = 0;  // opaque, never checked
};

struct FixtureRow {
  std::uint64_t d = 0;
  std::uint64_t p1 = 0, p2 = 0, q = 0;
  CaseTag case_tag = CaseTag::Case1;
  std::optional<DeltaSymbol> delta;
  std::optional<TableColumns> columns;  // absent for the inline examples
  std::vector<std::uint64_t> c;         // invariants of Cl(k_2^(1)) as printed
};

/// The 26 tabulated rows followed by d = 47158 and d = 59942.
const std::vector<FixtureRow>& fixtures();

/// Verdict implied by the 2-part of a printed class group.
HilbertCl2 expected_verdict(const std::vector<std::uint64_t>& c);

struct RowCheck {
  std::uint64_t d = 0;
  std::vector<std::string> mismatches;  // "column: expected X, got Y"
  std::optional<ClassificationVerdict> verdict;
  bool ok() const noexcept { return mismatches.empty(); }
};

struct FixtureReport {
  std::vector<RowCheck> rows;
  bool ok() const;
};

RowCheck check_fixture(const FixtureRow& row);
FixtureReport verify_fixtures();

enum class OutputFormat { Json, Csv, Markdown };

OutputFormat parse_format(std::string_view s);  // throws InvalidArgument
std::string render(const std::vector<ClassificationVerdict>& verdicts, OutputFormat f);
std::string render_json(const ClassificationVerdict& v);

enum class CaseFilter { Any, Case1, Case2, Case3, Case4, TypeTwoTwo, FourRankTwo, Metacyclic };

CaseFilter parse_case_filter(std::string_view s);  // "1".."4", "22", "4rank2", "meta"
bool matches(CaseFilter f, CaseTag c);

struct SearchSpec {
  std::uint64_t p_max = 100;  // bound on p1 and p2
  std::uint64_t q_max = 100;
  CaseFilter filter = CaseFilter::Any;
  std::optional<std::size_t> limit;
  unsigned jobs = 1;
};

/// Classifies every triple with p1 < p2 <= p_max, q <= q_max passing the
/// filter, sorted by ascending d. Output is independent of jobs.
std::vector<ClassificationVerdict> search(const SearchSpec& spec);

/// Defining polynomial, constant term first: x^2 - m, or for Q(sqrt a, sqrt b)
/// x^4 - 2(a + b) x^2 + (a - b)^2.
std::string quadratic_poly(std::uint64_t m);
std::string biquadratic_poly(std::uint64_t a, std::uint64_t b);

/// Parses the oracle's first line as whitespace-separated integers.
/// Throws OracleParseError.
std::vector<std::uint64_t> parse_oracle_line(const std::string& out);

struct OracleCheck {
  std::uint64_t d = 0;
  std::string column;
  std::uint64_t expected = 0;
  std::uint64_t oracle = 0;
  bool ok() const noexcept { return expected == oracle; }
};

struct OracleReport {
  bool skipped = false;
  std::vector<OracleCheck> checks;
  bool ok() const;
};

/// Runs TOWERLAB_ORACLE_CMD (with {POLY} substituted) once per field and
/// compares 2-parts with n, n1, n2, n3. Skipped when the variable is unset.
/// Throws OracleParseError, or OracleMismatch when strict is set.
OracleReport oracle_check(const std::vector<FixtureRow>& rows, bool strict = false);

/// Same, with an injected runner instead of a subprocess.
using OracleRunner = std::function<std::string(const std::string& poly)>;
OracleReport oracle_check(const std::vector<FixtureRow>& rows, const OracleRunner& run, bool strict = false);

}  // namespace towerlab
