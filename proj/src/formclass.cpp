#include "towerlab/formclass.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "towerlab/errors.hpp"
#include "towerlab/ntheory.hpp"
#include "towerlab/pell.hpp"

namespace towerlab {

namespace {

using i128 = __int128;

std::int64_t isqrt64(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct Egcd {
  i128 g, x, y;  // x*a + y*b = g >= 0
};

Egcd egcd(i128 a, i128 b) {
  i128 old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const i128 quot = old_r / r;
    i128 t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_x - quot * x;
    old_x = x;
    x = t;
    t = old_y - quot * y;
    old_y = y;
    y = t;
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

i128 mod_floor128(i128 a, i128 m) {
  const i128 r = a % m;
  return r < 0 ? r + m : r;
}

void check_discriminant(std::int64_t D) {
  if (D <= 0 || (mod_floor(D, 4) != 0 && mod_floor(D, 4) != 1)) {
    throw Error(Errc::InvalidDiscriminant, "discriminant " + std::to_string(D) + " must be positive and 0 or 1 mod 4");
  }
  const std::int64_t s = isqrt64(D);
  if (s * s == D) throw Error(Errc::InvalidDiscriminant, "discriminant " + std::to_string(D) + " is a square");
}

std::vector<std::uint64_t> invariant_factors_from_orders(const std::vector<std::uint64_t>& orders) {
  const std::uint64_t h = orders.size();
  // Per prime, exponents of the cyclic factors in descending order.
  std::vector<std::vector<std::uint64_t>> prime_powers;
  for (const auto& [p, e] : factor_small(h)) {
    std::vector<int> at_least;  // at_least[k-1] = number of factors with exponent >= k
    int prev_log = 0;
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      std::uint64_t count = 0;
      for (std::uint64_t o : orders) {
        if (pk % o == 0) ++count;
      }
      int log = 0;
      for (std::uint64_t c = count; c > 1; c /= p) ++log;
      at_least.push_back(log - prev_log);
      prev_log = log;
    }
    std::vector<std::uint64_t> powers;
    for (int k = static_cast<int>(at_least.size()); k >= 1; --k) {
      const int exact = at_least[k - 1] - (k < static_cast<int>(at_least.size()) ? at_least[k] : 0);
      std::uint64_t value = 1;
      for (int i = 0; i < k; ++i) value *= p;
      for (int i = 0; i < exact; ++i) powers.push_back(value);
    }
    prime_powers.push_back(std::move(powers));
  }
  std::size_t width = 0;
  for (const auto& pp : prime_powers) width = std::max(width, pp.size());
  std::vector<std::uint64_t> out(width, 1);
  for (const auto& pp : prime_powers) {
    for (std::size_t i = 0; i < pp.size(); ++i) out[i] *= pp[i];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

bool QuadForm::is_reduced() const {
  const std::int64_t D = discriminant();
  if (D <= 0) return false;
  const std::int64_t s = isqrt64(D);
  const std::int64_t two_a = 2 * (a < 0 ? -a : a);
  // sqrt(D) is irrational, so x < sqrt(D) <=> x <= s and x > sqrt(D) <=> x >= s + 1.
  return b > 0 && b <= s && two_a + b >= s + 1 && two_a - b <= s;
}

std::int64_t field_discriminant(std::int64_t m) { return mod_floor(m, 4) == 1 ? m : 4 * m; }

std::vector<QuadForm> enumerate_reduced_forms(std::int64_t D) {
  check_discriminant(D);
  const std::int64_t s = isqrt64(D);
  std::vector<QuadForm> out;
  for (std::int64_t b = (D % 2 == 0 ? 2 : 1); b <= s; b += 2) {
    const std::int64_t n = (D - b * b) / 4;  // a * c = -n
    for (std::int64_t a = 1; a * a <= n; ++a) {
      if (n % a != 0) continue;
      for (std::int64_t div : {a, n / a}) {
        if (2 * div + b < s + 1 || 2 * div - b > s) continue;
        if (std::gcd(std::gcd(div, b), n / div) != 1) continue;
        out.push_back({div, b, -n / div});
        out.push_back({-div, b, n / div});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<QuadForm>> reduced_form_cycles(std::int64_t D) {
  const std::vector<QuadForm> forms = enumerate_reduced_forms(D);
  std::vector<bool> seen(forms.size(), false);
  std::vector<std::vector<QuadForm>> out;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (seen[i]) continue;
    std::vector<QuadForm> cycle;
    QuadForm f = forms[i];
    do {
      const auto it = std::lower_bound(forms.begin(), forms.end(), f);
      if (it == forms.end() || *it != f) throw Error(Errc::InvalidDiscriminant, "rho left the reduced set");
      seen[static_cast<std::size_t>(it - forms.begin())] = true;
      cycle.push_back(f);
      f = rho(f);
    } while (f != forms[i]);
    out.push_back(std::move(cycle));
  }
  return out;
}

QuadForm rho(const QuadForm& f) {
  const std::int64_t D = f.discriminant();
  const std::int64_t s = isqrt64(D);
  const i128 ac = f.c < 0 ? -static_cast<i128>(f.c) : f.c;
  i128 b;
  if (ac <= s) {
    b = s - mod_floor128(static_cast<i128>(s) + f.b, 2 * ac);
  } else {
    b = mod_floor128(-static_cast<i128>(f.b), 2 * ac);
    if (b > ac) b -= 2 * ac;
  }
  const i128 num = b * b - D;
  const i128 den = 4 * static_cast<i128>(f.c);
  return {f.c, static_cast<std::int64_t>(b), static_cast<std::int64_t>(num / den)};
}

QuadForm reduce(QuadForm f) {
  for (int guard = 0; guard < 100000; ++guard) {
    if (f.is_reduced()) return f;
    f = rho(f);
  }
  throw Error(Errc::InvalidDiscriminant, "form reduction did not terminate");
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  const i128 D = f.discriminant();
  if (D != g.discriminant()) throw Error(Errc::InvalidDiscriminant, "composing forms of different discriminants");
  const i128 a1 = f.a, b1 = f.b, a2 = g.a, b2 = g.b;
  const i128 s = (b1 + b2) / 2;
  const Egcd first = egcd(a1, a2);
  const Egcd second = egcd(first.g, s);
  const i128 e = second.g;
  const i128 u = second.x * first.x;
  const i128 v = second.x * first.y;
  const i128 w = second.y;

  const i128 a3 = a1 * a2 / (e * e);
  const i128 numerator = u * a1 * b2 + v * a2 * b1 + w * ((b1 * b2 + D) / 2);
  const i128 abs_a3 = a3 < 0 ? -a3 : a3;
  i128 b3 = mod_floor128(numerator / e, 2 * abs_a3);
  if (b3 > abs_a3) b3 -= 2 * abs_a3;
  const i128 c_num = b3 * b3 - D;
  if (c_num % (4 * a3) != 0) throw Error(Errc::InvalidDiscriminant, "composition produced a non-integral form");
  return reduce({static_cast<std::int64_t>(a3), static_cast<std::int64_t>(b3),
                 static_cast<std::int64_t>(c_num / (4 * a3))});
}

NarrowClassGroup::NarrowClassGroup(std::int64_t D) : discriminant_(D) {
  reduced_ = enumerate_reduced_forms(D);
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  reduced_class_.assign(reduced_.size(), kUnassigned);

  auto index_of = [&](const QuadForm& f) {
    const auto it = std::lower_bound(reduced_.begin(), reduced_.end(), f);
    if (it == reduced_.end() || *it != f) throw Error(Errc::InvalidDiscriminant, "rho left the reduced set");
    return static_cast<std::size_t>(it - reduced_.begin());
  };

  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    if (reduced_class_[i] != kUnassigned) continue;
    const std::size_t cls = reps_.size();
    reps_.push_back(reduced_[i]);  // smallest member, since reduced_ is sorted
    std::size_t j = i;
    do {
      reduced_class_[j] = cls;
      j = index_of(rho(reduced_[j]));
    } while (j != i);
  }

  const std::int64_t b0 = D % 2;
  identity_ = class_of({1, b0, (b0 * b0 - D) / 4});

  std::vector<std::uint64_t> orders(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) orders[i] = element_order(i);
  invariants_ = invariant_factors_from_orders(orders);
  invariants_.erase(std::remove(invariants_.begin(), invariants_.end(), 1u), invariants_.end());

  std::uint64_t product = 1;
  for (std::uint64_t d : invariants_) product *= d;
  if (product != order()) throw Error(Errc::InvalidDiscriminant, "invariant factors do not multiply to h+");
}

std::size_t NarrowClassGroup::class_of(const QuadForm& f) const {
  const QuadForm r = reduce(f);
  const auto it = std::lower_bound(reduced_.begin(), reduced_.end(), r);
  if (it == reduced_.end() || *it != r) throw Error(Errc::InvalidDiscriminant, "form of another discriminant");
  return reduced_class_[static_cast<std::size_t>(it - reduced_.begin())];
}

std::size_t NarrowClassGroup::multiply(std::size_t i, std::size_t j) const {
  return class_of(compose(reps_.at(i), reps_.at(j)));
}

std::uint64_t NarrowClassGroup::element_order(std::size_t i) const {
  std::uint64_t k = 1;
  std::size_t x = i;
  while (x != identity_) {
    x = multiply(x, i);
    ++k;
    if (k > order()) throw Error(Errc::InvalidDiscriminant, "element order exceeds group order");
  }
  return k;
}

std::vector<std::uint64_t> NarrowClassGroup::two_sylow() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : invariants_) {
    std::uint64_t t = d & (~d + 1);  // lowest set bit = 2-part
    if (t > 1) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t NarrowClassGroup::two_part_order() const {
  std::uint64_t h = order();
  return h & (~h + 1);
}

int NarrowClassGroup::two_rank() const { return static_cast<int>(two_sylow().size()); }

int NarrowClassGroup::four_rank() const {
  const auto sylow = two_sylow();
  return static_cast<int>(std::count_if(sylow.begin(), sylow.end(), [](std::uint64_t d) { return d % 4 == 0; }));
}

NarrowClassGroup narrow_class_group(std::int64_t D) { return NarrowClassGroup(D); }

std::uint64_t h2_wide(std::uint64_t m) {
  const FundamentalUnit fu = fundamental_unit(m);
  const NarrowClassGroup group(field_discriminant(static_cast<std::int64_t>(m)));
  const std::uint64_t narrow = group.two_part_order();
  return fu.norm == Sign::Plus ? narrow / 2 : narrow;
}

std::vector<std::uint64_t> cl2_invariants(std::uint64_t m) {
  bool has_three_mod_four = false;
  for (const auto& [p, e] : factor_small(m)) {
    if (p % 4 == 3) has_three_mod_four = true;
  }
  if (!has_three_mod_four) {
    throw Error(Errc::RemarkInapplicable, "no prime = 3 (mod 4) divides " + std::to_string(m));
  }
  if (!is_squarefree(m)) throw Error(Errc::NotSquarefree, std::to_string(m) + " is not squarefree");
  const NarrowClassGroup group(field_discriminant(static_cast<std::int64_t>(m)));
  std::vector<std::uint64_t> sylow = group.two_sylow();
  if (sylow.empty() || sylow.front() != 2) {
    throw Error(Errc::RemarkInapplicable, "narrow 2-class group lacks the Z/2 factor");
  }
  sylow.erase(sylow.begin());
  return sylow;
}

}  // namespace towerlab
