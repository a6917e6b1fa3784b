#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "bshopf/core.hpp"

namespace bshopf {

/// Isomorphism-invariant encoding of a building set: the lexicographically
/// least sorted member list over all relabelings of the ground set.
struct CanonicalCode {
  int n = 0;
  std::vector<Mask> members;
  auto operator<=>(const CanonicalCode&) const = default;
};

/// Guarded at rank 10. Relabelings are restricted to those that respect an
/// isomorphism-invariant ordering of the elements, which keeps the search
/// small without affecting the result.
CanonicalCode canonical_code(const BuildingSet& b);

/// A monomial of BSet viewed as a polynomial algebra on connected building
/// sets: the sorted canonical codes of the connected factors. The unit is
/// the empty key.
using ProductKey = std::vector<CanonicalCode>;

ProductKey canonical_key(const BuildingSet& b);
/// A concrete building set in the class described by `key`.
BuildingSet realize(const ProductKey& key);
ProductKey multiply_keys(const ProductKey& a, const ProductKey& b);

/// Integer linear combination of equivalence classes of building sets.
class FormalSum {
 public:
  using Terms = std::map<ProductKey, std::int64_t>;

  FormalSum() = default;
  static FormalSum unit();
  static FormalSum of(const BuildingSet& b, std::int64_t coeff = 1);

  void add(const ProductKey& key, std::int64_t coeff);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const ProductKey& key) const;

  FormalSum& operator+=(const FormalSum& other);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b);
  friend FormalSum operator*(const FormalSum& a, const FormalSum& b);
  friend FormalSum operator*(std::int64_t c, const FormalSum& a);
  bool operator==(const FormalSum&) const = default;

 private:
  Terms terms_;
};

/// One set partition {J_1, ..., J_k} of the ground set, standing for the k!
/// ordered tuples over it, each contributing (-1)^k b|_{J_1} ... b|_{J_k}.
struct AntipodeTerm {
  std::int64_t coefficient;  // (-1)^k k!
  std::vector<Mask> blocks;
};

/// Uncollected antipode expansion grouped by unordered set partition.
/// Guarded at rank 10.
std::vector<AntipodeTerm> antipode_terms(const BuildingSet& b);

/// S(b) = sum_k (-1)^k sum over ordered (J_1,...,J_k) of prod b|_{J_i},
/// collected in canonical form. S(B_empty) = unit. Guarded at rank 8.
FormalSum antipode(const BuildingSet& b);

/// Elements of BSet^{(x) k}: keys are one ProductKey per tensor leg.
using TensorSum = std::map<std::vector<ProductKey>, std::int64_t>;

/// Delta applied to a single building set.
TensorSum coproduct(const BuildingSet& b);
/// Delta applied to tensor leg `leg`, turning k legs into k + 1.
TensorSum coproduct_on_leg(const TensorSum& t, std::size_t leg);
/// Legwise product of tensors with the same number of legs.
TensorSum multiply(const TensorSum& a, const TensorSum& b);

}  // namespace bshopf
