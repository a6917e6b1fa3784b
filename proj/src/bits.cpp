#include "bshopf/bits.hpp"

#include <algorithm>
#include <numeric>

#include "bshopf/checked.hpp"
#include "bshopf/errors.hpp"

namespace bshopf {

void require_at_most(const char* what, long long value, long long limit) {
  if (value > limit) {
    throw GuardError(std::string(what) + ": " + std::to_string(value) + " exceeds limit " +
                     std::to_string(limit));
  }
}

namespace checked {

__extension__ using Wide = __int128;

std::int64_t binomial(std::int64_t m, unsigned k) {
  Wide r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r = r * (m - static_cast<std::int64_t>(i));
    r /= static_cast<Wide>(i + 1);
    if (r > INT64_MAX || r < INT64_MIN) throw OverflowError("integer overflow in binomial");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t factorial(unsigned n) {
  std::int64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r = mul(r, i);
  return r;
}

}  // namespace checked

std::vector<int> elements(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

Mask pack(Mask m, Mask within) {
  Mask out = 0;
  int k = 0;
  while (within) {
    const Mask low = within & (~within + 1);
    if (m & low) out |= bit(k);
    ++k;
    within ^= low;
  }
  return out;
}

Mask unpack(Mask m, Mask within) {
  Mask out = 0;
  int k = 0;
  while (within) {
    const Mask low = within & (~within + 1);
    if (m & bit(k)) out |= low;
    ++k;
    within ^= low;
  }
  return out;
}

Components::Components(int n) : n_(n), parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

int Components::find(int x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void Components::join(Mask set) {
  if (!set) return;
  const int root = find(lowest(set));
  for (int e : elements(set)) {
    const int r = find(e);
    if (r != root) parent_[r] = root;
  }
}

int Components::count() const {
  int c = 0;
  for (int i = 0; i < n_; ++i) c += find(i) == i;
  return c;
}

std::vector<Mask> Components::masks() const {
  std::vector<Mask> by_root(n_, 0);
  for (int i = 0; i < n_; ++i) by_root[find(i)] |= bit(i);
  std::vector<Mask> out;
  for (Mask m : by_root)
    if (m) out.push_back(m);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return lowest(a) < lowest(b); });
  return out;
}

}  // namespace bshopf
