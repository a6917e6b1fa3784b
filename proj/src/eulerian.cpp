#include "bshopf/eulerian.hpp"

#include <algorithm>

#include "bshopf/checked.hpp"
#include "bshopf/chromatic.hpp"
#include "bshopf/errors.hpp"
#include "bshopf/formal_sum.hpp"
#include "bshopf/graphs.hpp"

namespace bshopf {

std::int64_t zeta_conjugate(const BuildingSet& b) {
  return b.is_discrete() ? checked::sign(b.rank()) : 0;
}

std::vector<std::int64_t> zeta_inverse_table(const BuildingSet& b) {
  const int n = b.rank();
  require_at_most("zeta inverse table rank", n, 16);
  const DiscreteTable discrete(b);
  std::vector<std::int64_t> d(std::size_t{1} << n, 0);
  d[0] = 1;
  for (Mask j = 1; j <= b.ground(); ++j) {
    std::int64_t total = 0;
    for_each_nonempty_subset(j, [&](Mask k) {
      if (discrete(k)) total = checked::sub(total, d[j & ~k]);
    });
    d[j] = total;
  }
  return d;
}

CharacterValueReport zeta_inverse(const BuildingSet& b) {
  require_at_most("zeta inverse rank", b.rank(), 16);
  CharacterValueReport r;
  r.by_polynomial = chromatic_polynomial(b)(-1);
  r.by_subsets = minus_one_subset_formula(b);
  if (b.rank() <= 10) {
    const DiscreteTable discrete(b);
    for (const AntipodeTerm& t : antipode_terms(b))
      if (std::all_of(t.blocks.begin(), t.blocks.end(), [&](Mask j) { return discrete(j); }))
        r.by_antipode = checked::add(r.by_antipode, t.coefficient);
  } else {
    r.by_antipode = zeta_inverse_table(b)[b.ground()];
  }
  if (r.by_polynomial != r.by_subsets || r.by_polynomial != r.by_antipode)
    throw CrossCheckError("zeta inverse routes disagree: polynomial " + std::to_string(r.by_polynomial) +
                          ", subsets " + std::to_string(r.by_subsets) + ", antipode " +
                          std::to_string(r.by_antipode));
  r.zeta_inv = r.by_polynomial;
  r.conjugate = zeta_conjugate(b);
  return r;
}

bool is_eulerian(const BuildingSet& b) {
  require_at_most("eulerian test rank", b.rank(), 14);
  const DiscreteTable discrete(b);
  const std::vector<std::int64_t> d = zeta_inverse_table(b);
  for (Mask j = 0; j <= b.ground(); ++j)
    if (!discrete(j) && d[j] != 0) return false;
  return true;
}

bool is_eulerian_geometric(const SetFamily& antichain) {
  for (Mask s : antichain.sets())
    if (popcount(s) < 2) throw InputError("generator must have >= 2 elements");
  if (!is_odd_collection(antichain)) return false;
  const SimplicialComplex k = nerve(antichain);
  return is_flag(k) && is_chordal(k.one_skeleton());
}

bool is_eulerian_geometric(const BuildingSet& b) {
  return is_eulerian_geometric(minimal_generators(b).minimal);
}

bool dehn_sommerville_check(const BuildingSet& b) {
  require_at_most("Dehn-Sommerville check rank", b.rank(), 14);
  const DiscreteTable discrete(b);
  const auto a = discrete_partition_counts(b);
  for (Mask j = 0; j <= b.ground(); ++j) {
    // chi(b|_J, -1) = sum_k a_k (-1)_k = sum_k a_k (-1)^k k!
    std::int64_t inv = 0;
    for (std::size_t k = 0; k < a[j].size(); ++k)
      inv = checked::add(inv, checked::mul(a[j][k], checked::sign(k) * checked::factorial(k)));
    const std::int64_t conj = discrete(j) ? checked::sign(popcount(j)) : 0;
    if (inv != conj) return false;
  }
  return true;
}

std::vector<BayerBilleraViolation> bayer_billera_check(const BuildingSet& b) {
  const int n = b.rank();
  require_at_most("Bayer-Billera check rank", n, 10);
  std::vector<BayerBilleraViolation> out;
  if (n == 0) return out;
  const std::vector<std::int64_t> f = flag_f_values(b);
  auto zeta_of = [&](const std::vector<int>& parts) {
    std::vector<int> nz;
    for (int p : parts)
      if (p > 0) nz.push_back(p);
    return f[Composition(nz).descents()];
  };
  for (const Composition& alpha : compositions(n)) {
    const auto& parts = alpha.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::int64_t value = 0;
      for (int j = 0; j <= parts[i]; ++j) {
        std::vector<int> split(parts.begin(), parts.begin() + i);
        split.push_back(j);
        split.push_back(parts[i] - j);
        split.insert(split.end(), parts.begin() + i + 1, parts.end());
        value = checked::add(value, checked::sign(j) * zeta_of(split));
      }
      if (value != 0) out.push_back({alpha, static_cast<int>(i) + 1, value});
    }
  }
  return out;
}

bool multinomial_identity_check(int n) {
  if (n < 1 || n > 12) throw InputError("multinomial identity check needs 1 <= n <= 12");
  std::int64_t total = 0;
  for (const Composition& alpha : compositions(n))
    total = checked::add(total, checked::sign(alpha.length()) * checked::multinomial(alpha.parts()));
  return total == checked::sign(n);
}

}  // namespace bshopf
