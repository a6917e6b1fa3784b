#pragma once

#include <cstdint>
#include <vector>

#include "bshopf/core.hpp"
#include "bshopf/polynomial.hpp"
#include "bshopf/symfunc.hpp"

namespace bshopf {

using ChromaticPolynomial = IntPolynomial;

/// The universal character: 1 on discrete building sets, 0 otherwise.
inline std::int64_t zeta(const BuildingSet& b) { return b.is_discrete() ? 1 : 0; }

/// Number of ordered decompositions X = J_1 u ... u J_k with |J_i| = alpha_i
/// and every b|_{J_i} discrete. Throws InputError on a weight mismatch.
std::int64_t zeta_alpha(const BuildingSet& b, const Composition& alpha);

/// All zeta_alpha(b) at once, indexed by the descent mask of alpha (so the
/// vector has 2^(n-1) entries; a single entry 1 for the empty building set).
/// Guarded at rank 12.
std::vector<std::int64_t> flag_f_values(const BuildingSet& b);

/// Psi(b) = sum over alpha of zeta_alpha(b) M_alpha. Guarded at rank 12.
QSymElement psi_monomial(const BuildingSet& b);

/// For every J of the ground set (indexed by mask), entry k counts the
/// unordered partitions of J into k blocks with discrete restriction.
/// Guarded at rank 16.
std::vector<std::vector<std::int64_t>> discrete_partition_counts(const BuildingSet& b);

/// chi(b, m) = Psi(b)(1^m) in the standard basis. Guarded at rank 16.
ChromaticPolynomial chromatic_polynomial(const BuildingSet& b);

/// chi(b, -1), computed from the polynomial and from the subset expansion
/// over C_min; throws CrossCheckError if they differ.
std::int64_t minus_one_invariant(const BuildingSet& b);

/// sum over S in C_min of (-1)^{|S|+c(S)}, components counted on the whole
/// ground set. Guarded at |C_min| = 20.
std::int64_t minus_one_subset_formula(const BuildingSet& b);

/// sum over S in C_min of (-1)^{|S|} p_{lambda(S)}, where lambda(S) lists the
/// sizes of the connected components of closure(S). Guarded at |C_min| = 20.
PSymElement psi_powersum_subsets(const BuildingSet& b);

/// Partitions of the ground set into blocks that are members of the
/// minimalization, with the Moebius function from the bottom element.
class ConnectedPartitionLattice {
 public:
  /// Guarded at rank 9.
  explicit ConnectedPartitionLattice(const BuildingSet& b);

  std::size_t size() const { return blocks_.size(); }
  /// Blocks of element i, sorted by mask value. Element 0 is the bottom.
  const std::vector<Mask>& blocks(std::size_t i) const { return blocks_[i]; }
  std::int64_t moebius(std::size_t i) const { return moebius_[i]; }
  Partition type(std::size_t i) const;
  /// Every block of i lies inside a block of j.
  bool leq(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::vector<Mask>> blocks_;
  std::vector<std::int64_t> moebius_;
};

/// sum over connected partitions pi of mu(0, pi) p_{type(pi)}. Guarded at rank 9.
PSymElement psi_powersum_moebius(const BuildingSet& b);

/// Maps {0..n-1} -> {1..m} that are not constant on any set of `c_min` with
/// at least two elements. Brute force, guarded at m^n = 10^7.
std::int64_t count_proper_colorings(const SetFamily& c_min, std::int64_t m);

struct FreeSetReduction {
  /// One factor per removed free set, in removal order.
  std::vector<ChromaticPolynomial> factors;
  BuildingSet residual;
};

/// Repeatedly removes a free set S of C_min (one meeting the union of the
/// other minimal generators in at most one element) together with its private
/// elements. A disjoint S contributes m^{|S|} - m, one sharing an element
/// contributes m^{|S|-1} - 1. The identity prod(factors) chi(residual) = chi(b)
/// is checked whenever chi is within its guard.
FreeSetReduction free_set_reduce(const BuildingSet& b);

}  // namespace bshopf
