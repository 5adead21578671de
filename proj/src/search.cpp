#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "towerlab/errors.hpp"
#include "towerlab/harness.hpp"

namespace towerlab {

CaseFilter parse_case_filter(std::string_view s) {
  if (s == "any") return CaseFilter::Any;
  if (s == "1") return CaseFilter::Case1;
  if (s == "2") return CaseFilter::Case2;
  if (s == "3") return CaseFilter::Case3;
  if (s == "4") return CaseFilter::Case4;
  if (s == "22") return CaseFilter::TypeTwoTwo;
  if (s == "4rank2") return CaseFilter::FourRankTwo;
  if (s == "meta") return CaseFilter::Metacyclic;
  throw Error(Errc::InvalidArgument, "unknown case filter '" + std::string(s) + "'");
}

bool matches(CaseFilter f, CaseTag c) {
  switch (f) {
    case CaseFilter::Any: return true;
    case CaseFilter::Case1: return c == CaseTag::Case1;
    case CaseFilter::Case2: return c == CaseTag::Case2;
    case CaseFilter::Case3: return c == CaseTag::Case3;
    case CaseFilter::Case4: return c == CaseTag::Case4;
    case CaseFilter::TypeTwoTwo: return c == CaseTag::TypeTwoTwo;
    case CaseFilter::FourRankTwo: return c == CaseTag::FourRankTwo;
    case CaseFilter::Metacyclic: return c == CaseTag::Metacyclic;
  }
  return false;
}

std::vector<ClassificationVerdict> search(const SearchSpec& spec) {
  if (spec.limit && *spec.limit == 0) return {};
  std::vector<std::uint64_t> ps, qs;
  for (std::uint64_t p : primes_up_to(std::max(spec.p_max, spec.q_max))) {
    if (p % 4 == 1 && p <= spec.p_max) ps.push_back(p);
    if (p % 4 == 3 && p <= spec.q_max) qs.push_back(p);
  }

  // The case only needs residue symbols, so filter before the full pipeline.
  std::vector<PrimeTriple> candidates;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      for (std::uint64_t q : qs) {
        const PrimeTriple t = make_triple(ps[i], ps[j], q);
        if (matches(spec.filter, case_of(symbol_profile(t)))) candidates.push_back(t);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) { return a.d() < b.d(); });
  if (spec.limit && candidates.size() > *spec.limit) {
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(*spec.limit), candidates.end());
  }

  std::vector<std::optional<ClassificationVerdict>> slots(candidates.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      try {
        slots[i].emplace(classify(candidates[i]));
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(candidates.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<ClassificationVerdict> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace towerlab
