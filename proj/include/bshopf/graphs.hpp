#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bshopf/core.hpp"
#include "bshopf/polynomial.hpp"

namespace bshopf {

/// Undirected graph on {0..v-1} without loops or multiple edges. Edges are
/// stored with u < v, in insertion order.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws InputError on loops, repeated edges or out-of-range endpoints.
  SimpleGraph(int v, std::vector<std::pair<int, int>> edges, std::vector<std::string> labels = {});
  static SimpleGraph complete(int v);
  static SimpleGraph path(int v);
  static SimpleGraph cycle(int v);

  int vertex_count() const { return v_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int i) const;
  /// Neighbourhood of each vertex.
  std::vector<Mask> adjacency() const;
  bool adjacent(int a, int b) const;
  /// c(E): number of connected components, isolated vertices included.
  int component_count() const;
  bool is_connected() const { return component_count() <= 1; }
  /// Acyclic (every component is a tree).
  bool is_forest() const { return edge_count() + component_count() == v_; }
  /// The subgraph induced on `vertices` is connected (false for the empty set).
  bool induces_connected(Mask vertices) const;

 private:
  int v_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> labels_;
};

/// A finite simplicial complex on vertices {0..n-1}: nonempty faces closed
/// under taking nonempty subsets, optionally labelled by positive integers.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Throws InputError if `faces` is not downward closed or a vertex is missing.
  SimplicialComplex(int vertex_count, std::vector<Mask> faces, std::vector<std::int64_t> labels = {});

  int vertex_count() const { return n_; }
  /// Sorted by (size, mask value).
  const std::vector<Mask>& faces() const { return faces_; }
  bool contains(Mask face) const;
  /// Label of a face (e.g. e_L(S) = |intersection of S|); 0 when unlabelled.
  std::int64_t label(Mask face) const;
  bool has_labels() const { return !labels_.empty(); }
  int dimension() const;
  SimpleGraph one_skeleton() const;

 private:
  int n_ = 0;
  std::vector<Mask> faces_;
  std::vector<std::int64_t> labels_;  // parallel to faces_
};

/// Index sets I of the family with nonempty common intersection, with |cap L_I|.
struct IntersectionPoset {
  std::vector<Mask> elements;  // sorted by (size, mask value)
  std::vector<int> sizes;
  bool operator==(const IntersectionPoset&) const = default;
};

/// Connected vertex subsets. Guarded at 16 vertices.
BuildingSet graphical(const SimpleGraph& g);

/// Generators of beta_n(g): the vertices come first, then for every edge in
/// order n-2 new elements; edge e = uv contributes {u, v, e_1, ..., e_{n-2}}.
SetFamily beta_generators(const SimpleGraph& g, int n);
/// closure(beta_generators(g, n)), labelled. Guarded at rank 20.
BuildingSet beta_n(const SimpleGraph& g, int n);

/// Subset expansion of the Tutte polynomial. Guarded at 20 edges.
BivariatePolynomial tutte(const SimpleGraph& g);

struct OrientationCounts {
  std::int64_t acyclic = 0;
  std::int64_t totally_cyclic = 0;  // every edge lies on a directed cycle
};

/// Brute force over all 2^|E| orientations. Guarded at 16 edges.
OrientationCounts orientation_counts(const SimpleGraph& g);

struct TutteBridges {
  OrientationCounts orientations;
  std::int64_t chi_beta2 = 0;  // chi(beta_2(g), -1)
  std::int64_t chi_beta3 = 0;  // chi(beta_3(g), -1)
  std::int64_t tutte_2_0 = 0;
  std::int64_t tutte_0_2 = 0;
};

/// Computes both sides of chi(beta_2, -1) = (-1)^|V| T(2,0) = (-1)^|V| acyclic
/// and chi(beta_3, -1) = (-1)^{|E|+c(E)} T(0,2) = (-1)^{|E|+c(E)} totally cyclic;
/// throws CrossCheckError if any of them disagree.
TutteBridges check_tutte_bridges(const SimpleGraph& g);

/// Faces are the subfamilies with nonempty intersection, labelled by the size
/// of the intersection. Requires an antichain of at most 20 sets.
SimplicialComplex nerve(const SetFamily& l);

/// Every face of the nerve has an odd label. Requires an antichain.
bool is_odd_collection(const SetFamily& l);

/// Every clique of the 1-skeleton is a face.
bool is_flag(const SimplicialComplex& k);

/// Maximum cardinality search, then a check that the reversed visiting order
/// is a perfect elimination ordering.
bool is_chordal(const SimpleGraph& g);

/// No full subcomplex is a 1-dimensional cycle: at least 3 vertices, every
/// vertex on exactly two edges, connected, and no face of dimension 2.
/// Direct search over vertex subsets, guarded at 16 vertices.
bool is_fully_acyclic(const SimplicialComplex& k);

/// Guarded at 16 sets.
IntersectionPoset intersection_poset(const SetFamily& l);

/// Sets as vertices, joined when they intersect.
SimpleGraph intersection_graph(const SetFamily& l);

/// All cliques of g as faces.
SimplicialComplex clique_complex(const SimpleGraph& g);

}  // namespace bshopf
