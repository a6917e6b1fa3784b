// Brute-force reference implementations used by the tests. They share no
// code with the library beyond the BuildingSet container itself.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "bshopf/core.hpp"
#include "bshopf/graphs.hpp"
#include "bshopf/polynomial.hpp"
#include "bshopf/symfunc.hpp"

namespace oracle {

using bshopf::BuildingSet;
using bshopf::Mask;

inline int pc(Mask m) { return __builtin_popcountll(m); }

// Least family containing `gens` and the singletons, closed under unions of
// overlapping members: pairwise unions until nothing changes.
inline std::set<Mask> closure(int n, const std::vector<Mask>& gens) {
  std::set<Mask> s(gens.begin(), gens.end());
  for (int i = 0; i < n; ++i) s.insert(Mask{1} << i);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(s.begin(), s.end());
    for (Mask a : cur)
      for (Mask b : cur)
        if ((a & b) && s.insert(a | b).second) grew = true;
  }
  return s;
}

inline BuildingSet building_set(int n, const std::vector<Mask>& gens) {
  const std::set<Mask> s = closure(n, gens);
  return BuildingSet::from_members(n, std::vector<Mask>(s.begin(), s.end()));
}

inline bool restriction_discrete(const BuildingSet& b, Mask j) {
  for (Mask s : b.members())
    if (pc(s) >= 2 && (s & ~j) == 0) return false;
  return true;
}

// zeta_alpha by assigning every element a block index.
inline std::int64_t zeta_alpha(const BuildingSet& b, const std::vector<int>& alpha) {
  const int n = b.rank(), k = static_cast<int>(alpha.size());
  if (k == 0) return n == 0 ? 1 : 0;
  std::vector<int> block(n, 0);
  std::int64_t count = 0;
  while (true) {
    std::vector<Mask> blocks(k, 0);
    for (int e = 0; e < n; ++e) blocks[block[e]] |= Mask{1} << e;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      ok = pc(blocks[i]) == alpha[i] && restriction_discrete(b, blocks[i]);
    count += ok;
    int e = 0;
    while (e < n && ++block[e] == k) block[e++] = 0;
    if (e == n) break;
  }
  return count;
}

// Colorings with m colors not constant on any set of size >= 2.
inline std::int64_t colorings(int n, const std::vector<Mask>& sets, int m) {
  if (m == 0) return n == 0 ? 1 : 0;
  std::vector<int> color(n, 0);
  std::int64_t count = 0;
  while (true) {
    bool ok = true;
    for (Mask s : sets) {
      if (pc(s) < 2) continue;
      const int c = color[__builtin_ctzll(s)];
      bool mono = true;
      for (int e = 0; e < n; ++e)
        if ((s >> e & 1) && color[e] != c) mono = false;
      if (mono) ok = false;
    }
    count += ok;
    int e = 0;
    while (e < n && ++color[e] == m) color[e++] = 0;
    if (e == n) break;
  }
  return count;
}

// The polynomial of degree <= n through (m, values[m]) for m = 0..n, by
// Newton forward differences in the falling-factorial basis.
inline bshopf::IntPolynomial interpolate(const std::vector<std::int64_t>& values) {
  std::vector<std::int64_t> diff = values;
  bshopf::IntPolynomial p;
  bshopf::IntPolynomial falling = bshopf::IntPolynomial::constant(1);
  std::int64_t fact = 1;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) fact *= static_cast<std::int64_t>(k);
    // diff[0] = k-th forward difference at 0; coefficient of (m)_k is diff[0]/k!
    p = p + bshopf::IntPolynomial::constant(diff[0] / fact) * falling;
    falling = falling * bshopf::IntPolynomial({-static_cast<std::int64_t>(k), 1});
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    if (!diff.empty()) diff.pop_back();
  }
  return p;
}

inline bshopf::IntPolynomial chromatic_by_colorings(const BuildingSet& b) {
  std::vector<Mask> sets(b.members().begin(), b.members().end());
  std::vector<std::int64_t> values;
  for (int m = 0; m <= b.rank(); ++m) values.push_back(colorings(b.rank(), sets, m));
  return interpolate(values);
}

// Graph chromatic polynomial by deletion-contraction on multigraphs
// (parallel edges collapse, loops give zero).
inline bshopf::IntPolynomial graph_chromatic(int v, std::vector<std::pair<int, int>> edges) {
  std::set<std::pair<int, int>> simple;
  for (auto [a, b] : edges) {
    if (a == b) return {};
    simple.emplace(std::min(a, b), std::max(a, b));
  }
  if (simple.empty()) return bshopf::IntPolynomial::monomial(v);
  const auto [a, b] = *simple.begin();
  std::vector<std::pair<int, int>> deleted(std::next(simple.begin()), simple.end());
  std::vector<std::pair<int, int>> contracted;
  for (auto [x, y] : deleted) {
    auto relabel = [&](int z) {
      if (z == b) z = a;
      return z > b ? z - 1 : z;
    };
    contracted.emplace_back(relabel(x), relabel(y));
  }
  return graph_chromatic(v, deleted) - graph_chromatic(v - 1, contracted);
}

// Chordless cycle of length >= 4 exists?
inline bool has_induced_long_cycle(const bshopf::SimpleGraph& g) {
  const int v = g.vertex_count();
  const auto adj = g.adjacency();
  for (Mask w = 1; w < (Mask{1} << v); ++w) {
    if (pc(w) < 4) continue;
    bool two = true;
    for (int x = 0; x < v; ++x)
      if ((w >> x & 1) && pc(adj[x] & w) != 2) two = false;
    if (two && g.induces_connected(w)) return true;
  }
  return false;
}

// Minimal generators: members of size >= 2 that closing up the members
// strictly inside them does not produce, then the inclusion-minimal ones.
inline std::vector<Mask> minimal_generators(const BuildingSet& b) {
  std::vector<Mask> all;
  for (Mask t : b.members()) {
    if (pc(t) < 2) continue;
    std::vector<Mask> inside;
    for (Mask s : b.members())
      if (s != t && (s & ~t) == 0) inside.push_back(s);
    const std::set<Mask> c = closure(0, inside);
    if (!c.count(t)) all.push_back(t);
  }
  std::vector<Mask> minimal;
  for (Mask t : all) {
    bool has_smaller = false;
    for (Mask s : all)
      if (s != t && (s & ~t) == 0) has_smaller = true;
    if (!has_smaller) minimal.push_back(t);
  }
  return minimal;
}

// Every antichain of subsets of {0..n-1} with at least two elements.
inline std::vector<std::vector<Mask>> all_antichains(int n) {
  std::vector<Mask> pool;
  for (Mask s = 1; s < (Mask{1} << n); ++s)
    if (pc(s) >= 2) pool.push_back(s);
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.push_back(cur);
    for (std::size_t i = from; i < pool.size(); ++i) {
      bool ok = true;
      for (Mask c : cur)
        if ((c & ~pool[i]) == 0 || (pool[i] & ~c) == 0) ok = false;
      if (!ok) continue;
      cur.push_back(pool[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Random antichain on n elements: draw up to `tries` candidate sets and keep
// those incomparable with everything kept so far. With odd_bias, candidate
// sizes are drawn from the odd numbers >= 3 where possible.
inline std::vector<Mask> random_antichain(std::mt19937_64& rng, int n, int tries, bool odd_bias) {
  std::vector<Mask> out;
  std::uniform_int_distribution<int> elem(0, n - 1);
  for (int t = 0; t < tries; ++t) {
    int size;
    if (odd_bias && n >= 3) {
      std::uniform_int_distribution<int> half(1, (n - 1) / 2);
      size = 2 * half(rng) + 1;
    } else {
      std::uniform_int_distribution<int> any(2, n);
      size = any(rng);
    }
    Mask s = 0;
    while (pc(s) < size) s |= Mask{1} << elem(rng);
    bool ok = true;
    for (Mask c : out)
      if ((c & ~s) == 0 || (s & ~c) == 0) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

// All simple graphs on v labelled vertices.
inline std::vector<bshopf::SimpleGraph> all_graphs(int v) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
  std::vector<bshopf::SimpleGraph> out;
  for (Mask e = 0; e < (Mask{1} << pairs.size()); ++e) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (e >> i & 1) edges.push_back(pairs[i]);
    out.emplace_back(v, edges);
  }
  return out;
}

}  // namespace oracle
