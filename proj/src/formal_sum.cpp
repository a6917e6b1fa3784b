#include "bshopf/formal_sum.hpp"

#include <algorithm>
#include <unordered_map>

#include "bshopf/checked.hpp"
#include "bshopf/errors.hpp"

namespace bshopf {

namespace {

Mask relabel(Mask s, const std::vector<int>& to) {
  Mask out = 0;
  while (s) {
    out |= bit(to[lowest(s)]);
    s &= s - 1;
  }
  return out;
}

// Calls f(blocks) for every set partition of `ground`.
template <typename F>
void for_each_set_partition(Mask ground, std::vector<Mask>& blocks, F&& f) {
  if (!ground) {
    f(blocks);
    return;
  }
  const Mask first = ground & (~ground + 1);
  const Mask rest = ground & ~first;
  for_each_subset(rest, [&](Mask s) {
    blocks.push_back(first | s);
    for_each_set_partition(rest & ~s, blocks, f);
    blocks.pop_back();
  });
}

}  // namespace

CanonicalCode canonical_code(const BuildingSet& b) {
  const int n = b.rank();
  require_at_most("canonical form rank", n, 10);

  std::vector<std::vector<int>> signature(n, std::vector<int>(n + 1, 0));
  for (Mask s : b.members())
    for (int e : elements(s)) ++signature[e][popcount(s)];

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return signature[x] < signature[y]; });
  std::vector<std::vector<int>> cells;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || signature[order[i]] != signature[order[i - 1]]) cells.emplace_back();
    cells.back().push_back(order[i]);
  }

  CanonicalCode best{n, {}};
  bool have_best = false;
  std::vector<int> to(n);
  std::vector<Mask> encoded(b.members().size());
  while (true) {
    int pos = 0;
    for (const auto& cell : cells)
      for (int e : cell) to[e] = pos++;
    std::transform(b.members().begin(), b.members().end(), encoded.begin(),
                   [&](Mask s) { return relabel(s, to); });
    std::sort(encoded.begin(), encoded.end(), size_then_value_less);
    if (!have_best || encoded < best.members) {
      best.members = encoded;
      have_best = true;
    }
    std::size_t c = cells.size();
    while (c > 0 && !std::next_permutation(cells[c - 1].begin(), cells[c - 1].end())) --c;
    if (c == 0) break;
  }
  return best;
}

ProductKey canonical_key(const BuildingSet& b) {
  ProductKey key;
  for (const BuildingSet& c : connected_components(b)) key.push_back(canonical_code(c));
  std::sort(key.begin(), key.end());
  return key;
}

BuildingSet realize(const ProductKey& key) {
  BuildingSet out;
  for (const CanonicalCode& c : key)
    out = product(out, make_trusted(c.n, c.members));
  return out;
}

ProductKey multiply_keys(const ProductKey& a, const ProductKey& b) {
  ProductKey out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------

FormalSum FormalSum::unit() {
  FormalSum f;
  f.add({}, 1);
  return f;
}

FormalSum FormalSum::of(const BuildingSet& b, std::int64_t coeff) {
  FormalSum f;
  f.add(canonical_key(b), coeff);
  return f;
}

void FormalSum::add(const ProductKey& key, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, 0);
  it->second = checked::add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t FormalSum::coefficient(const ProductKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

FormalSum operator-(FormalSum a, const FormalSum& b) {
  for (const auto& [k, c] : b.terms_) a.add(k, checked::neg(c));
  return a;
}

FormalSum operator*(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add(multiply_keys(ka, kb), checked::mul(ca, cb));
  return out;
}

FormalSum operator*(std::int64_t c, const FormalSum& a) {
  FormalSum out;
  for (const auto& [k, v] : a.terms_) out.add(k, checked::mul(c, v));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<AntipodeTerm> antipode_terms(const BuildingSet& b) {
  require_at_most("antipode rank", b.rank(), 10);
  std::vector<AntipodeTerm> out;
  if (b.rank() == 0) {
    out.push_back({1, {}});
    return out;
  }
  std::vector<Mask> blocks;
  for_each_set_partition(b.ground(), blocks, [&](const std::vector<Mask>& bl) {
    const auto k = static_cast<unsigned>(bl.size());
    out.push_back({checked::sign(k) * checked::factorial(k), bl});
  });
  return out;
}

FormalSum antipode(const BuildingSet& b) {
  require_at_most("antipode rank", b.rank(), 8);
  std::unordered_map<Mask, ProductKey> block_key;
  FormalSum out;
  for (const AntipodeTerm& t : antipode_terms(b)) {
    ProductKey key;
    for (Mask j : t.blocks) {
      auto it = block_key.find(j);
      if (it == block_key.end()) it = block_key.emplace(j, canonical_key(restriction(b, j))).first;
      key = multiply_keys(key, it->second);
    }
    out.add(key, t.coefficient);
  }
  return out;
}

// ---------------------------------------------------------------------------

TensorSum coproduct(const BuildingSet& b) {
  TensorSum out;
  for (const auto& [left, right] : coproduct_terms(b)) {
    auto& c = out[{canonical_key(left), canonical_key(right)}];
    c = checked::add(c, 1);
  }
  return out;
}

TensorSum coproduct_on_leg(const TensorSum& t, std::size_t leg) {
  TensorSum out;
  for (const auto& [legs, coeff] : t) {
    for (const auto& [split, c] : coproduct(realize(legs.at(leg)))) {
      std::vector<ProductKey> key(legs.begin(), legs.begin() + leg);
      key.insert(key.end(), split.begin(), split.end());
      key.insert(key.end(), legs.begin() + leg + 1, legs.end());
      auto& v = out[key];
      v = checked::add(v, checked::mul(coeff, c));
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TensorSum multiply(const TensorSum& a, const TensorSum& b) {
  TensorSum out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      if (ka.size() != kb.size()) throw InputError("tensor leg counts differ");
      std::vector<ProductKey> key(ka.size());
      for (std::size_t i = 0; i < ka.size(); ++i) key[i] = multiply_keys(ka[i], kb[i]);
      auto& v = out[key];
      v = checked::add(v, checked::mul(ca, cb));
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace bshopf
