#include "towerlab/triple.hpp"

#include <string>

#include "towerlab/errors.hpp"

namespace towerlab {

PrimeTriple make_triple(std::uint64_t p1, std::uint64_t p2, std::uint64_t q) {
  auto bad = [&](const std::string& why) {
    return Error(Errc::InvalidTriple, "(" + std::to_string(p1) + ", " + std::to_string(p2) + ", " +
                                          std::to_string(q) + "): " + why);
  };
  for (std::uint64_t v : {p1, p2, q}) {
    if (v == 2 || !is_prime(v)) throw bad(std::to_string(v) + " is not an odd prime");
  }
  if (p1 % 4 != 1 || p2 % 4 != 1) throw bad("p1 and p2 must be 1 mod 4");
  if (q % 4 != 3) throw bad("q must be 3 mod 4");
  if (p1 == p2) throw bad("p1 and p2 must differ");
  return {OddPrime(p1), OddPrime(p2), OddPrime(q)};
}

std::string_view to_string(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::TypeTwoTwo: return "TypeTwoTwo";
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
    case CaseTag::Case4: return "Case4";
    case CaseTag::Metacyclic: return "Metacyclic";
    case CaseTag::FourRankTwo: return "FourRankTwo";
  }
  return "?";
}

}  // namespace towerlab
