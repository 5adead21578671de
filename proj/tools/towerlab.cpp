// towerlab: classify Q(sqrt(2 p1 p2 q)), search triples, check the reference tables.

#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "towerlab/errors.hpp"
#include "towerlab/harness.hpp"

using namespace towerlab;

namespace {

constexpr int kInvalidInput = 2;
constexpr int kInconsistent = 3;

// d = 2 p1 p2 q with p1, p2 = 1 (mod 4) and q = 3 (mod 4).
PrimeTriple triple_from_d(std::uint64_t d) {
  const auto bad = [d](const std::string& why) {
    return Error(Errc::InvalidTriple, "d=" + std::to_string(d) + " " + why);
  };
  if (d % 2 != 0) throw bad("is odd");
  const auto factors = factor_small(d / 2);
  if (factors.size() != 3) throw bad("is not 2 times three distinct odd primes");
  std::vector<std::uint64_t> ones, threes;
  for (const auto& [p, e] : factors) {
    if (e != 1 || p == 2) throw bad("is not 2 times three distinct odd primes");
    (p % 4 == 1 ? ones : threes).push_back(p);
  }
  if (ones.size() != 2) throw bad("needs two primes = 1 (mod 4) and one = 3 (mod 4)");
  return make_triple(ones[0], ones[1], threes[0]);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-class field tower classification for Q(sqrt(2 p1 p2 q))"};
  app.require_subcommand(1);

  std::string format = "json";
  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "markdown"}));
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify one field");
  std::vector<std::uint64_t> primes;
  std::uint64_t d_arg = 0;
  auto* primes_opt = classify_cmd->add_option("--primes", primes, "p1 p2 q")->expected(3);
  auto* d_opt = classify_cmd->add_option("--d", d_arg, "Radicand d = 2 p1 p2 q");
  primes_opt->excludes(d_opt);
  add_format(classify_cmd);

  auto* search_cmd = app.add_subcommand("search", "Classify all triples under the bounds, ordered by d");
  SearchSpec spec;
  spec.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string case_arg = "any";
  std::size_t limit = 0;
  search_cmd->add_option("--p-max", spec.p_max, "Bound on p1 and p2")->capture_default_str();
  search_cmd->add_option("--q-max", spec.q_max, "Bound on q")->capture_default_str();
  search_cmd->add_option("--case", case_arg, "Case filter")
      ->check(CLI::IsMember({"any", "1", "2", "3", "4", "22", "4rank2", "meta"}));
  auto* limit_opt = search_cmd->add_option("--limit", limit, "Maximum number of rows");
  search_cmd->add_option("--jobs", spec.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(search_cmd);

  auto* verify_cmd = app.add_subcommand("verify-paper", "Recompute the reference table columns");
  add_format(verify_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Cross-check class numbers with TOWERLAB_ORACLE_CMD");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) {
      PrimeTriple t = [&] {
        if (*primes_opt) return make_triple(primes[0], primes[1], primes[2]);
        if (*d_opt) return triple_from_d(d_arg);
        throw Error(Errc::InvalidArgument, "give --primes p1 p2 q or --d");
      }();
      const ClassificationVerdict v = classify(t);
      const OutputFormat f = parse_format(format);
      std::cout << (f == OutputFormat::Json ? render_json(v) : render({v}, f));
      for (const auto& flag : v.evidence.flags) std::cerr << flag << "\n";
      return v.inconsistent() ? kInconsistent : 0;
    }

    if (search_cmd->parsed()) {
      spec.filter = parse_case_filter(case_arg);
      if (*limit_opt) spec.limit = limit;
      std::cout << render(search(spec), parse_format(format));
      return 0;
    }

    if (verify_cmd->parsed()) {
      const FixtureReport report = verify_fixtures();
      std::vector<ClassificationVerdict> verdicts;
      for (const RowCheck& r : report.rows) {
        std::cerr << "d=" << r.d << (r.ok() ? " ok" : " MISMATCH") << "\n";
        for (const auto& m : r.mismatches) std::cerr << "  " << m << "\n";
        if (r.verdict) verdicts.push_back(*r.verdict);
      }
      std::cout << render(verdicts, parse_format(format));
      return report.ok() ? 0 : 1;
    }

    if (oracle_cmd->parsed()) {
      const OracleReport report = oracle_check(fixtures());
      if (report.skipped) {
        std::cout << "skipped (TOWERLAB_ORACLE_CMD not set)\n";
        return 0;
      }
      for (const OracleCheck& c : report.checks) {
        std::cout << "d=" << c.d << " " << c.column << " computed=" << c.expected << " oracle=" << c.oracle
                  << (c.ok() ? " ok" : " MISMATCH") << "\n";
      }
      return report.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    const bool input_error = e.code() == Errc::InvalidTriple || e.code() == Errc::InvalidArgument;
    return input_error ? kInvalidInput : 1;
  }
  return 0;
}
