#include "towerlab/redei.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "towerlab/errors.hpp"
#include "towerlab/formclass.hpp"
#include "towerlab/ntheory.hpp"

namespace towerlab {

std::int64_t PrimeDiscriminantList::product() const {
  std::int64_t p = 1;
  for (std::int64_t e : entries) p *= e;
  return p;
}

std::uint64_t PrimeDiscriminantList::prime(std::size_t i) const {
  const std::int64_t e = entries.at(i);
  const std::uint64_t a = static_cast<std::uint64_t>(e < 0 ? -e : e);
  return (a == 4 || a == 8) ? 2 : a;
}

PrimeDiscriminantList prime_discriminants(std::int64_t m) {
  const std::uint64_t abs_m = static_cast<std::uint64_t>(m < 0 ? -m : m);
  if (abs_m < 2 || !is_squarefree(abs_m)) {
    throw Error(Errc::NotSquarefree, "radicand " + std::to_string(m) + " must be squarefree with |m| > 1");
  }
  std::vector<std::int64_t> raw;
  for (const auto& [p, e] : factor_small(abs_m)) {
    const auto sp = static_cast<std::int64_t>(p);
    if (p == 2) {
      raw.push_back(mod_floor(m, 8) == 2 ? 8 : -8);
    } else {
      raw.push_back(p % 4 == 1 ? sp : -sp);
    }
  }
  if (mod_floor(m, 4) == 3) raw.push_back(-4);

  PrimeDiscriminantList list;
  std::vector<std::int64_t> pos, neg;
  for (std::int64_t e : raw) (e > 0 ? pos : neg).push_back(e);
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end(), [](std::int64_t a, std::int64_t b) { return -a < -b; });
  list.s = static_cast<int>(pos.size());
  list.t = static_cast<int>(neg.size());
  list.entries = pos;
  list.entries.insert(list.entries.end(), neg.begin(), neg.end());

  if (list.product() != field_discriminant(m)) {
    throw Error(Errc::InvalidDiscriminant, "prime discriminants do not multiply to d_k for m=" + std::to_string(m));
  }
  return list;
}

int rank_gf2(std::vector<std::vector<std::uint8_t>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [col](const auto& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      for (std::size_t c = col; c < cols; ++c) rows[r][c] ^= rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

RedeiMatrix redei_matrix(std::int64_t m) {
  const PrimeDiscriminantList list = prime_discriminants(m);
  const std::int64_t d = list.product();
  const std::size_t n = list.entries.size();

  RedeiMatrix R;
  R.entries.assign(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Int numerator =
          i == j ? Int(static_cast<long>(d / list.entries[i])) : Int(static_cast<long>(list.entries[i]));
      const int symbol = kronecker_symbol(numerator, Int(static_cast<unsigned long>(list.prime(j))));
      if (symbol == 0) throw Error(Errc::InvalidDiscriminant, "vanishing Redei symbol");
      R.entries[i][j] = symbol == -1 ? 1 : 0;
    }
  }
  // The diagonal entry of column j is the product of the off-diagonal ones,
  // so every column sums to zero.
  for (std::size_t j = 0; j < n; ++j) {
    std::uint8_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum ^= R.entries[i][j];
    if (sum != 0) throw Error(Errc::InvalidDiscriminant, "Redei matrix column does not sum to zero");
  }
  R.rank = rank_gf2(R.entries);
  return R;
}

int narrow_four_rank(std::int64_t m) {
  const PrimeDiscriminantList list = prime_discriminants(m);
  return list.s + list.t - 1 - redei_matrix(m).rank;
}

int four_rank(std::int64_t m) {
  const std::uint64_t abs_m = static_cast<std::uint64_t>(m < 0 ? -m : m);
  bool has_three_mod_four = false;
  for (const auto& [p, e] : factor_small(abs_m)) {
    if (p % 4 == 3) has_three_mod_four = true;
  }
  if (!has_three_mod_four) {
    throw Error(Errc::RemarkInapplicable, "wide 4-rank needs a prime = 3 (mod 4) dividing " + std::to_string(m));
  }
  return narrow_four_rank(m);
}

}  // namespace towerlab
