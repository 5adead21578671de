#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "towerlab/errors.hpp"
#include "towerlab/harness.hpp"

namespace towerlab {

namespace {

std::uint64_t two_part_of_order(const std::vector<std::uint64_t>& divisors) {
  std::uint64_t out = 1;
  for (std::uint64_t v : divisors) out *= v & (~v + 1);
  return out;
}

std::string run_command(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw Error(Errc::OracleUnavailable, "cannot spawn '" + cmd + "'");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
  const int status = pclose(pipe);
  if (status != 0) throw Error(Errc::OracleUnavailable, "'" + cmd + "' exited with status " + std::to_string(status));
  return out;
}

std::string substitute(std::string tmpl, const std::string& poly) {
  const std::string key = "{POLY}";
  for (auto pos = tmpl.find(key); pos != std::string::npos; pos = tmpl.find(key, pos + poly.size())) {
    tmpl.replace(pos, key.size(), poly);
  }
  return tmpl;
}

}  // namespace

std::string quadratic_poly(std::uint64_t m) { return "-" + std::to_string(m) + ",0,1"; }

std::string biquadratic_poly(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a > b ? a - b : b - a;
  return std::to_string(diff * diff) + ",0,-" + std::to_string(2 * (a + b)) + ",0,1";
}

std::vector<std::uint64_t> parse_oracle_line(const std::string& out) {
  const std::string line = out.substr(0, out.find('\n'));
  std::istringstream is(line);
  std::vector<std::uint64_t> values;
  std::string token;
  while (is >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(Errc::OracleParseError, "non-integer token '" + token + "' in '" + line + "'");
    }
    values.push_back(std::stoull(token));
  }
  return values;
}

bool OracleReport::ok() const {
  for (const auto& c : checks) {
    if (!c.ok()) return false;
  }
  return true;
}

OracleReport oracle_check(const std::vector<FixtureRow>& rows, bool strict) {
  const char* tmpl = std::getenv("TOWERLAB_ORACLE_CMD");
  if (!tmpl || !*tmpl) {
    OracleReport r;
    r.skipped = true;
    return r;
  }
  const std::string command(tmpl);
  return oracle_check(rows, [&command](const std::string& poly) { return run_command(substitute(command, poly)); },
                      strict);
}

OracleReport oracle_check(const std::vector<FixtureRow>& rows, const OracleRunner& run, bool strict) {
  OracleReport report;
  for (const FixtureRow& row : rows) {
    const ClassificationVerdict v = classify(row.p1, row.p2, row.q);
    const PrimeTriple& t = v.triple;
    const auto ask = [&](const std::string& column, const std::string& poly, std::uint64_t expected) {
      OracleCheck c{row.d, column, expected, two_part_of_order(parse_oracle_line(run(poly)))};
      if (strict && !c.ok()) {
        throw Error(Errc::OracleMismatch, "d=" + std::to_string(row.d) + " " + column + ": computed " +
                                              std::to_string(expected) + ", oracle " + std::to_string(c.oracle));
      }
      report.checks.push_back(c);
    };
    ask("n", quadratic_poly(t.d()), v.evidence.n);
    if (!v.evidence.n_i) continue;
    const auto& n_i = *v.evidence.n_i;
    for (int i = 1; i <= 3; ++i) {
      const auto r = kuroda_radicands(i, t);
      ask("n" + std::to_string(i), biquadratic_poly(r[0], r[1]), n_i[i - 1]);
    }
  }
  return report;
}

}  // namespace towerlab
