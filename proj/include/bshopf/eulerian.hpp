#pragma once

#include <cstdint>
#include <vector>

#include "bshopf/core.hpp"
#include "bshopf/symfunc.hpp"

namespace bshopf {

struct CharacterValueReport {
  std::int64_t zeta_inv = 0;
  std::int64_t by_polynomial = 0;  // chi(b, -1)
  std::int64_t by_subsets = 0;     // sum over S in C_min of (-1)^{|S|+c(S)}
  std::int64_t by_antipode = 0;    // zeta(S(b))
  std::int64_t conjugate = 0;      // (-1)^n on discrete b, else 0
};

/// zeta^{-1}(b) by three routes, cross-checked (CrossCheckError on mismatch).
/// Up to rank 10 the antipode route sums over set partitions; beyond that it
/// uses the convolution recursion. Guarded at rank 16.
CharacterValueReport zeta_inverse(const BuildingSet& b);

/// The conjugate character: (-1)^n if b is discrete of rank n, else 0.
std::int64_t zeta_conjugate(const BuildingSet& b);

/// zeta^{-1}(b|_J) for every J, indexed by mask, from
/// d(J) = -sum over nonempty K in J with b|_K discrete of d(J \ K). Guarded at rank 16.
std::vector<std::int64_t> zeta_inverse_table(const BuildingSet& b);

/// Every restriction is discrete or has zeta^{-1} = 0. Guarded at rank 14.
bool is_eulerian(const BuildingSet& b);

/// C_min is an odd collection whose nerve is a flag complex with chordal 1-skeleton.
bool is_eulerian_geometric(const BuildingSet& b);
/// The same test on an antichain of sets with at least two elements each,
/// standing for the building set it generates.
bool is_eulerian_geometric(const SetFamily& antichain);

/// (zeta^{-1} - conjugate)(b|_J) = 0 for every J, with zeta^{-1} evaluated as
/// chi(b|_J, -1) from unordered partition counts. Guarded at rank 14.
bool dehn_sommerville_check(const BuildingSet& b);

struct BayerBilleraViolation {
  Composition alpha;
  int position;  // 1-based index of the part that is split
  std::int64_t value;
};

/// Evaluates sum_{j=0}^{a_i} (-1)^j zeta_{(a_1, ..., j, a_i - j, ..., a_k)}(b)
/// (zero parts dropped) for every alpha of n and every i; returns the nonzero
/// ones in (alpha, i) order. Guarded at rank 10.
std::vector<BayerBilleraViolation> bayer_billera_check(const BuildingSet& b);

/// sum over alpha of n of (-1)^{k(alpha)} (n choose alpha) equals (-1)^n. 1 <= n <= 12.
bool multinomial_identity_check(int n);

}  // namespace bshopf
