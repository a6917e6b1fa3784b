#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bshopf {

/// A subset of a ground set {0, ..., n-1}, bit i set iff i is in the subset.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr int lowest(Mask m) { return std::countr_zero(m); }
constexpr bool overlaps(Mask a, Mask b) { return (a & b) != 0; }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

/// Order used for member lists: by size, then by mask value.
constexpr bool size_then_value_less(Mask a, Mask b) {
  const int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

/// Indices of the set bits, ascending.
std::vector<int> elements(Mask m);

/// Compresses `m` onto the positions of `within`: the k-th element of
/// `within` becomes bit k (parallel bit extract).
Mask pack(Mask m, Mask within);

/// Inverse of pack: bit k goes to the k-th element of `within`.
Mask unpack(Mask m, Mask within);

/// Calls f(sub) for every subset of `m`, including 0 and `m`.
template <typename F>
void for_each_subset(Mask m, F&& f) {
  Mask s = 0;
  while (true) {
    f(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

/// Calls f(sub) for every nonempty subset of `m`.
template <typename F>
void for_each_nonempty_subset(Mask m, F&& f) {
  for (Mask s = m; s != 0; s = (s - 1) & m) f(s);
}

/// Union-find on at most 64 elements, used for hypergraph components.
class Components {
 public:
  explicit Components(int n);
  void join(Mask set);
  int count() const;
  /// Component masks, ordered by their lowest element.
  std::vector<Mask> masks() const;

 private:
  int find(int x) const;
  int n_;
  mutable std::vector<int> parent_;
};

}  // namespace bshopf
