#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bshopf/bits.hpp"

namespace bshopf {

/// An arbitrary collection of distinct subsets of {0, ..., n-1}: generating
/// collections, hypergraphs, antichains fed to the nerve construction.
class SetFamily {
 public:
  SetFamily() = default;
  /// Throws InputError on out-of-range elements or duplicate sets.
  SetFamily(int n, std::vector<Mask> sets);

  int ground_size() const { return n_; }
  std::span<const Mask> sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  /// No set contains another.
  bool is_antichain() const;
  /// Inclusion-minimal sets, in their original order.
  SetFamily minimal_sets() const;
  SetFamily without(Mask s) const;

  bool operator==(const SetFamily&) const = default;

 private:
  int n_ = 0;
  std::vector<Mask> sets_;
};

/// A building set on {0, ..., n-1}. Immutable once constructed; members are
/// kept sorted by (size, mask value).
class BuildingSet {
 public:
  /// The empty building set on the empty ground set (the unit).
  BuildingSet() = default;

  /// Validates (B1), (B2), nonemptiness and distinctness; throws InputError.
  static BuildingSet from_members(int n, std::vector<Mask> members,
                                  std::vector<std::string> labels = {});
  /// D_n: singletons only.
  static BuildingSet discrete(int n);
  /// The connected closure of D_n: singletons plus the whole ground set.
  static BuildingSet discrete_connected(int n);
  /// All nonempty subsets.
  static BuildingSet power_set(int n);

  int rank() const { return n_; }
  Mask ground() const { return full_mask(n_); }
  std::span<const Mask> members() const { return members_; }
  bool contains(Mask s) const;
  bool is_discrete() const { return members_.size() == static_cast<std::size_t>(n_); }
  bool is_connected() const { return n_ >= 1 && contains(ground()); }

  /// Display names of the ground-set elements; empty when unnamed.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int i) const;
  BuildingSet with_labels(std::vector<std::string> labels) const;

  /// Same ground size and members; labels are ignored.
  bool operator==(const BuildingSet& other) const {
    return n_ == other.n_ && members_ == other.members_;
  }

 private:
  BuildingSet(int n, std::vector<Mask> sorted_members, std::vector<std::string> labels)
      : n_(n), members_(std::move(sorted_members)), labels_(std::move(labels)) {}

  friend BuildingSet closure(const SetFamily&);
  friend BuildingSet restriction(const BuildingSet&, Mask);
  friend BuildingSet product(const BuildingSet&, const BuildingSet&);
  friend BuildingSet make_trusted(int, std::vector<Mask>, std::vector<std::string>);

  int n_ = 0;
  std::vector<Mask> members_;
  std::vector<std::string> labels_;
};

/// Builds from members already known to form a building set (sorts them).
/// Internal constructions use this to skip the quadratic (B1) scan.
BuildingSet make_trusted(int n, std::vector<Mask> members, std::vector<std::string> labels = {});

/// Least building set containing every set of `c` plus all singletons.
/// Every set of `c` needs at least two elements.
BuildingSet closure(const SetFamily& c);

/// b|_I with the elements of I re-packed to 0..|I|-1 in increasing order
/// (element k of the result is the k-th smallest element of I).
BuildingSet restriction(const BuildingSet& b, Mask i);

/// Disjoint union; the elements of b2 are shifted by rank(b1).
BuildingSet product(const BuildingSet& b1, const BuildingSet& b2);

/// (b|_I, b|_{I^c}) for I = 0, 1, ..., 2^n - 1 in mask order.
std::vector<std::pair<BuildingSet, BuildingSet>> coproduct_terms(const BuildingSet& b);

struct Generators {
  /// Members of size >= 2 that are not the union of two overlapping proper members.
  SetFamily all;
  /// Inclusion-minimal sets of `all`; an antichain.
  SetFamily minimal;
};

Generators minimal_generators(const BuildingSet& b);

/// closure of the minimal generators.
BuildingSet minimalization(const BuildingSet& b);

/// closure(C \ {s}) on the same ground set; s must be a minimal generator.
BuildingSet deletion(const BuildingSet& b, Mask s);

struct Contraction {
  BuildingSet set;
  /// index_map[old element] = element of the contracted ground set. Elements of
  /// s all map to the merged element, which takes the place of min(s).
  std::vector<int> index_map;
};

/// b/s: s is merged into one element and C/S = {A/S : A in C} is closed up
/// again (sets that collapse to a single element are dropped).
Contraction contraction(const BuildingSet& b, Mask s);

/// Maximal members; they partition the ground set.
std::vector<Mask> component_masks(const BuildingSet& b);
std::vector<BuildingSet> connected_components(const BuildingSet& b);

/// True iff some bijection of ground sets carries members onto members.
/// Guarded at rank 10.
bool equivalent(const BuildingSet& b1, const BuildingSet& b2);

/// Answers "is b|_J discrete?" for every J of the ground set in O(1) after
/// an O(n 2^n) sweep. Guarded at rank 24.
class DiscreteTable {
 public:
  explicit DiscreteTable(const BuildingSet& b);
  bool operator()(Mask j) const { return !nondiscrete_[j]; }
  int rank() const { return n_; }

 private:
  int n_;
  std::vector<std::uint8_t> nondiscrete_;
};

}  // namespace bshopf
