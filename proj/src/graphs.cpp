#include "bshopf/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bshopf/checked.hpp"
#include "bshopf/chromatic.hpp"
#include "bshopf/errors.hpp"

namespace bshopf {

namespace {

// Calls f(clique) for every nonempty clique of the graph with neighbourhoods `adj`.
template <typename F>
void for_each_clique(const std::vector<Mask>& adj, Mask clique, Mask candidates, F& f) {
  while (candidates) {
    const int x = lowest(candidates);
    candidates &= candidates - 1;
    const Mask next = clique | bit(x);
    f(next);
    for_each_clique(adj, next, candidates & adj[x], f);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(int v, std::vector<std::pair<int, int>> edges, std::vector<std::string> labels)
    : v_(v), labels_(std::move(labels)) {
  if (v < 0 || v > kMaxGround) throw InputError("vertex count must be in 0..64");
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(v))
    throw InputError("label count does not match vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= v || b >= v) throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("loops are not allowed");
    if (a > b) std::swap(a, b);
    if (!seen.emplace(a, b).second) throw InputError("repeated edge");
    edges_.emplace_back(a, b);
  }
}

SimpleGraph SimpleGraph::complete(int v) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) e.emplace_back(a, b);
  return SimpleGraph(v, std::move(e));
}

SimpleGraph SimpleGraph::path(int v) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a + 1 < v; ++a) e.emplace_back(a, a + 1);
  return SimpleGraph(v, std::move(e));
}

SimpleGraph SimpleGraph::cycle(int v) {
  if (v < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < v; ++a) e.emplace_back(a, (a + 1) % v);
  return SimpleGraph(v, std::move(e));
}

std::string SimpleGraph::label(int i) const {
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

std::vector<Mask> SimpleGraph::adjacency() const {
  std::vector<Mask> adj(v_, 0);
  for (auto [a, b] : edges_) {
    adj[a] |= bit(b);
    adj[b] |= bit(a);
  }
  return adj;
}

bool SimpleGraph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::find(edges_.begin(), edges_.end(), std::make_pair(a, b)) != edges_.end();
}

int SimpleGraph::component_count() const {
  Components c(v_);
  for (auto [a, b] : edges_) c.join(bit(a) | bit(b));
  return c.count();
}

bool SimpleGraph::induces_connected(Mask vertices) const {
  if (vertices == 0) return false;
  const std::vector<Mask> adj = adjacency();
  Mask reach = vertices & (~vertices + 1);
  Mask frontier = reach;
  while (frontier) {
    const int x = lowest(frontier);
    frontier &= frontier - 1;
    const Mask fresh = adj[x] & vertices & ~reach;
    reach |= fresh;
    frontier |= fresh;
  }
  return reach == vertices;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Mask> faces,
                                     std::vector<std::int64_t> labels)
    : n_(vertex_count) {
  if (n_ < 0 || n_ > kMaxGround) throw InputError("vertex count must be in 0..64");
  if (!labels.empty() && labels.size() != faces.size())
    throw InputError("face label count does not match face count");
  std::vector<std::size_t> order(faces.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return size_then_value_less(faces[i], faces[j]); });
  for (std::size_t i : order) {
    faces_.push_back(faces[i]);
    if (!labels.empty()) labels_.push_back(labels[i]);
  }
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const Mask f = faces_[i];
    if (f == 0 || !subset_of(f, full_mask(n_))) throw InputError("face is empty or out of range");
    if (i > 0 && faces_[i - 1] == f) throw InputError("repeated face");
    for (int x : elements(f))
      if (popcount(f) > 1 && !contains(f & ~bit(x))) throw InputError("face set is not downward closed");
  }
  for (int x = 0; x < n_; ++x)
    if (!contains(bit(x))) throw InputError("vertex missing from the complex");
}

bool SimplicialComplex::contains(Mask face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, size_then_value_less);
}

std::int64_t SimplicialComplex::label(Mask face) const {
  if (labels_.empty()) return 0;
  auto it = std::lower_bound(faces_.begin(), faces_.end(), face, size_then_value_less);
  if (it == faces_.end() || *it != face) throw InputError("not a face");
  return labels_[it - faces_.begin()];
}

int SimplicialComplex::dimension() const {
  return faces_.empty() ? -1 : popcount(faces_.back()) - 1;
}

SimpleGraph SimplicialComplex::one_skeleton() const {
  std::vector<std::pair<int, int>> e;
  for (Mask f : faces_)
    if (popcount(f) == 2) e.emplace_back(lowest(f), 63 - std::countl_zero(f));
  return SimpleGraph(n_, std::move(e));
}

// ---------------------------------------------------------------------------
// Building sets from graphs

BuildingSet graphical(const SimpleGraph& g) {
  const int v = g.vertex_count();
  require_at_most("graphical building set vertex count", v, 16);
  std::vector<Mask> members;
  for (Mask s = 1; s <= full_mask(v); ++s)
    if (g.induces_connected(s)) members.push_back(s);
  std::vector<std::string> labels;
  if (!g.labels().empty()) labels = g.labels();
  return make_trusted(v, std::move(members), std::move(labels));
}

SetFamily beta_generators(const SimpleGraph& g, int n) {
  if (n < 2) throw InputError("beta_n needs n >= 2");
  const long long rank = g.vertex_count() + static_cast<long long>(n - 2) * g.edge_count();
  require_at_most("beta_n ground set size", rank, kMaxGround);
  std::vector<Mask> gens;
  int next = g.vertex_count();
  for (auto [a, b] : g.edges()) {
    Mask s = bit(a) | bit(b);
    for (int j = 0; j < n - 2; ++j) s |= bit(next++);
    gens.push_back(s);
  }
  return SetFamily(static_cast<int>(rank), std::move(gens));
}

BuildingSet beta_n(const SimpleGraph& g, int n) {
  const SetFamily gens = beta_generators(g, n);
  require_at_most("beta_n rank", gens.ground_size(), 20);
  std::vector<std::string> labels;
  for (int i = 0; i < g.vertex_count(); ++i) labels.push_back(g.label(i));
  for (auto [a, b] : g.edges())
    for (int j = 1; j <= n - 2; ++j) labels.push_back(g.label(a) + "-" + g.label(b) + ":" + std::to_string(j));
  return closure(gens).with_labels(std::move(labels));
}

// ---------------------------------------------------------------------------
// Tutte polynomial and orientations

BivariatePolynomial tutte(const SimpleGraph& g) {
  const int e = g.edge_count();
  require_at_most("Tutte polynomial edge count", e, 20);
  const int v = g.vertex_count();
  const int c_e = g.component_count();
  BivariatePolynomial t;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << e); ++s) {
    Components c(v);
    for (int i = 0; i < e; ++i)
      if (s & (std::uint32_t{1} << i)) c.join(bit(g.edges()[i].first) | bit(g.edges()[i].second));
    const auto px = static_cast<unsigned>(c.count() - c_e);
    const auto py = static_cast<unsigned>(c.count() + std::popcount(s) - v);
    // (x-1)^px (y-1)^py
    for (unsigned i = 0; i <= px; ++i)
      for (unsigned j = 0; j <= py; ++j)
        t.add(static_cast<int>(i), static_cast<int>(j),
              checked::mul(checked::binomial(px, i), checked::binomial(py, j)) *
                  checked::sign(px - i + py - j));
  }
  return t;
}

OrientationCounts orientation_counts(const SimpleGraph& g) {
  const int e = g.edge_count();
  require_at_most("orientation enumeration edge count", e, 16);
  const int v = g.vertex_count();
  OrientationCounts out;
  std::vector<Mask> succ(v), reach(v);
  for (std::uint32_t o = 0; o < (std::uint32_t{1} << e); ++o) {
    std::fill(succ.begin(), succ.end(), 0);
    for (int i = 0; i < e; ++i) {
      auto [a, b] = g.edges()[i];
      if (o & (std::uint32_t{1} << i)) std::swap(a, b);
      succ[a] |= bit(b);
    }
    for (int x = 0; x < v; ++x) {
      Mask r = succ[x], frontier = succ[x];
      while (frontier) {
        const int y = lowest(frontier);
        frontier &= frontier - 1;
        const Mask fresh = succ[y] & ~r;
        r |= fresh;
        frontier |= fresh;
      }
      reach[x] = r;
    }
    bool acyclic = true;
    for (int x = 0; x < v; ++x)
      if (reach[x] & bit(x)) acyclic = false;
    bool cyclic = true;
    for (int i = 0; i < e; ++i) {
      auto [a, b] = g.edges()[i];
      if (o & (std::uint32_t{1} << i)) std::swap(a, b);
      if (!(reach[b] & bit(a))) cyclic = false;
    }
    out.acyclic += acyclic;
    out.totally_cyclic += cyclic;
  }
  return out;
}

TutteBridges check_tutte_bridges(const SimpleGraph& g) {
  TutteBridges r;
  r.orientations = orientation_counts(g);
  r.chi_beta2 = minus_one_invariant(beta_n(g, 2));
  r.chi_beta3 = minus_one_invariant(beta_n(g, 3));
  const BivariatePolynomial t = tutte(g);
  r.tutte_2_0 = t(2, 0);
  r.tutte_0_2 = t(0, 2);
  const std::int64_t s2 = checked::sign(g.vertex_count());
  const std::int64_t s3 = checked::sign(g.edge_count() + g.component_count());
  if (r.chi_beta2 != s2 * r.tutte_2_0 || r.tutte_2_0 != r.orientations.acyclic)
    throw CrossCheckError("beta_2 / Tutte(2,0) / acyclic orientation counts disagree");
  if (r.chi_beta3 != s3 * r.tutte_0_2 || r.tutte_0_2 != r.orientations.totally_cyclic)
    throw CrossCheckError("beta_3 / Tutte(0,2) / totally cyclic orientation counts disagree");
  return r;
}

// ---------------------------------------------------------------------------
// Nerves and complexes

SimplicialComplex nerve(const SetFamily& l) {
  if (!l.is_antichain()) throw InputError("nerve requires an antichain");
  const auto sets = l.sets();
  const int m = static_cast<int>(sets.size());
  require_at_most("nerve family size", m, 20);
  std::vector<Mask> faces;
  std::vector<std::int64_t> labels;
  auto rec = [&](auto&& self, Mask face, Mask meet, int from) -> void {
    for (int i = from; i < m; ++i) {
      const Mask next = face ? (meet & sets[i]) : sets[i];
      if (next == 0) continue;
      faces.push_back(face | bit(i));
      labels.push_back(popcount(next));
      self(self, face | bit(i), next, i + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return SimplicialComplex(m, std::move(faces), std::move(labels));
}

bool is_odd_collection(const SetFamily& l) {
  const SimplicialComplex k = nerve(l);
  return std::all_of(k.faces().begin(), k.faces().end(), [&](Mask f) { return k.label(f) % 2 == 1; });
}

bool is_flag(const SimplicialComplex& k) {
  const std::vector<Mask> adj = k.one_skeleton().adjacency();
  bool ok = true;
  auto check = [&](Mask clique) {
    if (ok && !k.contains(clique)) ok = false;
  };
  for (int x = 0; x < k.vertex_count() && ok; ++x) {
    check(bit(x));
    Mask rest = adj[x] & ~full_mask(x + 1);
    for_each_clique(adj, bit(x), rest, check);
  }
  return ok;
}

bool is_chordal(const SimpleGraph& g) {
  const int v = g.vertex_count();
  const std::vector<Mask> adj = g.adjacency();
  std::vector<int> weight(v, 0), visit_pos(v, -1), order;
  for (int step = 0; step < v; ++step) {
    int best = -1;
    for (int x = 0; x < v; ++x)
      if (visit_pos[x] < 0 && (best < 0 || weight[x] > weight[best])) best = x;
    visit_pos[best] = step;
    order.push_back(best);
    for (int y : elements(adj[best]))
      if (visit_pos[y] < 0) ++weight[y];
  }
  // Reversed visiting order is a perfect elimination ordering iff, for every
  // vertex, its earlier-visited neighbours other than the latest one are all
  // adjacent to that latest one.
  Mask visited = 0;
  for (int x : order) {
    const Mask earlier = adj[x] & visited;
    if (earlier) {
      int parent = -1;
      for (int y : elements(earlier))
        if (parent < 0 || visit_pos[y] > visit_pos[parent]) parent = y;
      if (!subset_of(earlier & ~bit(parent), adj[parent])) return false;
    }
    visited |= bit(x);
  }
  return true;
}

bool is_fully_acyclic(const SimplicialComplex& k) {
  const int n = k.vertex_count();
  require_at_most("fully acyclic search vertex count", n, 16);
  const SimpleGraph skeleton = k.one_skeleton();
  const std::vector<Mask> adj = skeleton.adjacency();
  std::vector<Mask> triangles;
  for (Mask f : k.faces())
    if (popcount(f) == 3) triangles.push_back(f);
  for (Mask w = 1; w <= full_mask(n); ++w) {
    if (popcount(w) < 3) continue;
    const auto all_degree_two = [&] {
      for (int x : elements(w))
        if (popcount(adj[x] & w) != 2) return false;
      return true;
    };
    if (!all_degree_two() || !skeleton.induces_connected(w)) continue;
    if (std::none_of(triangles.begin(), triangles.end(), [w](Mask t) { return subset_of(t, w); }))
      return false;
  }
  return true;
}

IntersectionPoset intersection_poset(const SetFamily& l) {
  const auto sets = l.sets();
  const int m = static_cast<int>(sets.size());
  require_at_most("intersection poset family size", m, 16);
  IntersectionPoset p;
  std::vector<std::pair<Mask, int>> found;
  for (Mask idx = 1; idx <= full_mask(m); ++idx) {
    Mask meet = ~Mask{0};
    for (int i : elements(idx)) meet &= sets[i];
    if (meet) found.emplace_back(idx, popcount(meet));
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return size_then_value_less(a.first, b.first); });
  for (auto [idx, size] : found) {
    p.elements.push_back(idx);
    p.sizes.push_back(size);
  }
  return p;
}

SimpleGraph intersection_graph(const SetFamily& l) {
  const auto sets = l.sets();
  const int m = static_cast<int>(sets.size());
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (overlaps(sets[i], sets[j])) e.emplace_back(i, j);
  return SimpleGraph(m, std::move(e));
}

SimplicialComplex clique_complex(const SimpleGraph& g) {
  const std::vector<Mask> adj = g.adjacency();
  std::vector<Mask> faces;
  auto collect = [&](Mask c) { faces.push_back(c); };
  for_each_clique(adj, 0, full_mask(g.vertex_count()), collect);
  return SimplicialComplex(g.vertex_count(), std::move(faces));
}

}  // namespace bshopf
