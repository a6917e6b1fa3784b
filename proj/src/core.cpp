#include "bshopf/core.hpp"

#include <algorithm>
#include <unordered_set>

#include "bshopf/errors.hpp"
#include "bshopf/formal_sum.hpp"

namespace bshopf {

namespace {

void sort_members(std::vector<Mask>& m) { std::sort(m.begin(), m.end(), size_then_value_less); }

void check_range(int n, Mask s, const char* what) {
  if (n < 0 || n > kMaxGround) throw InputError("ground set size must be in 0..64");
  if (!subset_of(s, full_mask(n)))
    throw InputError(std::string(what) + " has an element outside the ground set");
}

// Can the elements of `t` be linked up by generators strictly inside t?
bool linked_by_proper_generators(Mask t, const std::vector<Mask>& gens) {
  Mask reach = t & (~t + 1);
  bool grew = true;
  while (grew && reach != t) {
    grew = false;
    for (Mask g : gens) {
      if (g != t && subset_of(g, t) && overlaps(g, reach) && !subset_of(g, reach)) {
        reach |= g;
        grew = true;
      }
    }
  }
  return reach == t;
}

}  // namespace

// ---------------------------------------------------------------------------
// SetFamily

SetFamily::SetFamily(int n, std::vector<Mask> sets) : n_(n), sets_(std::move(sets)) {
  std::unordered_set<Mask> seen;
  for (Mask s : sets_) {
    check_range(n_, s, "set");
    if (!seen.insert(s).second) throw InputError("duplicate set in family");
  }
}

bool SetFamily::is_antichain() const {
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (std::size_t j = 0; j < sets_.size(); ++j)
      if (i != j && subset_of(sets_[i], sets_[j])) return false;
  return true;
}

SetFamily SetFamily::minimal_sets() const {
  std::vector<Mask> out;
  for (Mask s : sets_) {
    const bool has_smaller = std::any_of(sets_.begin(), sets_.end(),
                                         [s](Mask t) { return t != s && subset_of(t, s); });
    if (!has_smaller) out.push_back(s);
  }
  return SetFamily(n_, std::move(out));
}

SetFamily SetFamily::without(Mask s) const {
  std::vector<Mask> out;
  for (Mask t : sets_)
    if (t != s) out.push_back(t);
  return SetFamily(n_, std::move(out));
}

// ---------------------------------------------------------------------------
// BuildingSet

BuildingSet make_trusted(int n, std::vector<Mask> members, std::vector<std::string> labels) {
  sort_members(members);
  return BuildingSet(n, std::move(members), std::move(labels));
}

BuildingSet BuildingSet::from_members(int n, std::vector<Mask> members,
                                      std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
    throw InputError("label count does not match ground set size");
  std::unordered_set<Mask> seen;
  for (Mask s : members) {
    check_range(n, s, "member");
    if (s == 0) throw InputError("building set member is empty");
    if (!seen.insert(s).second) throw InputError("duplicate building set member");
  }
  for (int i = 0; i < n; ++i)
    if (!seen.count(bit(i)))
      throw InputError("singleton {" + std::to_string(i) + "} missing (B2)");
  for (Mask a : members)
    for (Mask b : members)
      if (overlaps(a, b) && !seen.count(a | b))
        throw InputError("union of overlapping members is not a member (B1)");
  return make_trusted(n, std::move(members), std::move(labels));
}

BuildingSet BuildingSet::discrete(int n) {
  check_range(n, 0, "ground");
  std::vector<Mask> m;
  for (int i = 0; i < n; ++i) m.push_back(bit(i));
  return make_trusted(n, std::move(m));
}

BuildingSet BuildingSet::discrete_connected(int n) {
  check_range(n, 0, "ground");
  std::vector<Mask> m;
  for (int i = 0; i < n; ++i) m.push_back(bit(i));
  if (n >= 2) m.push_back(full_mask(n));
  return make_trusted(n, std::move(m));
}

BuildingSet BuildingSet::power_set(int n) {
  require_at_most("power set rank", n, 24);
  std::vector<Mask> m;
  for (Mask s = 1; s <= full_mask(n); ++s) m.push_back(s);
  return make_trusted(n, std::move(m));
}

bool BuildingSet::contains(Mask s) const {
  return std::binary_search(members_.begin(), members_.end(), s, size_then_value_less);
}

std::string BuildingSet::label(int i) const {
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

BuildingSet BuildingSet::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
    throw InputError("label count does not match ground set size");
  return BuildingSet(n_, members_, std::move(labels));
}

// ---------------------------------------------------------------------------
// Operations

BuildingSet closure(const SetFamily& c) {
  const int n = c.ground_size();
  std::vector<Mask> gens;
  for (Mask s : c.sets()) {
    if (popcount(s) < 2) throw InputError("generator must have >= 2 elements");
    gens.push_back(s);
  }
  std::unordered_set<Mask> seen(gens.begin(), gens.end());
  std::vector<Mask> members(gens.begin(), gens.end());
  std::vector<Mask> frontier = members;
  // C_{k+1} = C_k + { S u S' : S in C_0, S' in C_k, S n S' != 0 }
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask t : frontier)
      for (Mask g : gens)
        if (overlaps(g, t) && seen.insert(g | t).second) next.push_back(g | t);
    members.insert(members.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (int i = 0; i < n; ++i)
    if (seen.insert(bit(i)).second) members.push_back(bit(i));
  sort_members(members);
  return BuildingSet(n, std::move(members), {});
}

BuildingSet restriction(const BuildingSet& b, Mask i) {
  check_range(b.n_, i, "restriction subset");
  std::vector<Mask> out;
  for (Mask s : b.members_)
    if (subset_of(s, i)) out.push_back(pack(s, i));
  std::vector<std::string> labels;
  if (!b.labels_.empty())
    for (int e : elements(i)) labels.push_back(b.labels_[e]);
  // pack() is order preserving on subsets of i, so `out` stays sorted
  return BuildingSet(popcount(i), std::move(out), std::move(labels));
}

BuildingSet product(const BuildingSet& b1, const BuildingSet& b2) {
  const int n = b1.n_ + b2.n_;
  if (n > kMaxGround) throw GuardError("product rank exceeds 64");
  std::vector<Mask> out(b1.members_.begin(), b1.members_.end());
  for (Mask s : b2.members_) out.push_back(s << b1.n_);
  std::vector<std::string> labels;
  if (!b1.labels_.empty() || !b2.labels_.empty()) {
    for (int i = 0; i < b1.n_; ++i) labels.push_back(b1.label(i));
    for (int i = 0; i < b2.n_; ++i) labels.push_back(b2.label(i));
  }
  sort_members(out);
  return BuildingSet(n, std::move(out), std::move(labels));
}

std::vector<std::pair<BuildingSet, BuildingSet>> coproduct_terms(const BuildingSet& b) {
  require_at_most("coproduct rank", b.rank(), 20);
  const Mask x = b.ground();
  std::vector<std::pair<BuildingSet, BuildingSet>> out;
  out.reserve(std::size_t{1} << b.rank());
  for (Mask i = 0;; ++i) {
    out.emplace_back(restriction(b, i), restriction(b, x & ~i));
    if (i == x) break;
  }
  return out;
}

Generators minimal_generators(const BuildingSet& b) {
  std::vector<Mask> gens;
  // members come in size order, so every proper submember is seen first
  for (Mask t : b.members()) {
    if (popcount(t) < 2) continue;
    if (!linked_by_proper_generators(t, gens)) gens.push_back(t);
  }
  SetFamily all(b.rank(), gens);
  SetFamily minimal = all.minimal_sets();
  return {std::move(all), std::move(minimal)};
}

BuildingSet minimalization(const BuildingSet& b) {
  return closure(minimal_generators(b).minimal).with_labels(b.labels());
}

namespace {

Generators require_minimal_generator(const BuildingSet& b, Mask s) {
  Generators g = minimal_generators(b);
  const auto mins = g.minimal.sets();
  if (std::find(mins.begin(), mins.end(), s) == mins.end())
    throw InputError("set is not a minimal generator of the building set");
  return g;
}

}  // namespace

BuildingSet deletion(const BuildingSet& b, Mask s) {
  const Generators g = require_minimal_generator(b, s);
  return closure(g.all.without(s)).with_labels(b.labels());
}

Contraction contraction(const BuildingSet& b, Mask s) {
  const Generators g = require_minimal_generator(b, s);
  const int merged = lowest(s);
  const Mask kept = b.ground() & ~(s & ~bit(merged));
  const int n = popcount(kept);

  std::vector<int> index_map(b.rank());
  for (int x = 0; x < b.rank(); ++x) {
    const int rep = (s & bit(x)) ? merged : x;
    index_map[x] = popcount(kept & (bit(rep) - 1));
  }

  std::vector<Mask> gens;
  std::unordered_set<Mask> seen;
  for (Mask a : g.all.sets()) {
    Mask image = overlaps(a, s) ? ((a & ~s) | bit(merged)) : a;
    image = pack(image, kept);
    if (popcount(image) < 2) continue;  // A within S collapses to the merged point
    if (seen.insert(image).second) gens.push_back(image);
  }

  std::vector<std::string> labels;
  if (!b.labels().empty()) {
    for (int e : elements(kept)) {
      if (e != merged) {
        labels.push_back(b.labels()[e]);
        continue;
      }
      std::string name;
      for (int x : elements(s)) name += (name.empty() ? "" : "+") + b.labels()[x];
      labels.push_back(name);
    }
  }
  return {closure(SetFamily(n, std::move(gens))).with_labels(std::move(labels)),
          std::move(index_map)};
}

std::vector<Mask> component_masks(const BuildingSet& b) {
  std::vector<Mask> out;
  Mask covered = 0;
  const auto m = b.members();
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (overlaps(*it, covered)) continue;
    out.push_back(*it);
    covered |= *it;
  }
  std::sort(out.begin(), out.end(), [](Mask x, Mask y) { return lowest(x) < lowest(y); });
  return out;
}

std::vector<BuildingSet> connected_components(const BuildingSet& b) {
  std::vector<BuildingSet> out;
  for (Mask c : component_masks(b)) out.push_back(restriction(b, c));
  return out;
}

bool equivalent(const BuildingSet& b1, const BuildingSet& b2) {
  if (b1.rank() != b2.rank() || b1.members().size() != b2.members().size()) return false;
  std::vector<int> p1(b1.rank() + 1), p2(b2.rank() + 1);
  for (Mask s : b1.members()) ++p1[popcount(s)];
  for (Mask s : b2.members()) ++p2[popcount(s)];
  if (p1 != p2) return false;
  require_at_most("equivalence rank", b1.rank(), 10);
  return canonical_code(b1) == canonical_code(b2);
}

DiscreteTable::DiscreteTable(const BuildingSet& b) : n_(b.rank()) {
  require_at_most("discrete table rank", n_, 24);
  nondiscrete_.assign(std::size_t{1} << n_, 0);
  for (Mask s : b.members())
    if (popcount(s) >= 2) nondiscrete_[s] = 1;
  for (int i = 0; i < n_; ++i)
    for (Mask j = 0; j < nondiscrete_.size(); ++j)
      if (j & bit(i)) nondiscrete_[j] |= nondiscrete_[j ^ bit(i)];
}

}  // namespace bshopf
