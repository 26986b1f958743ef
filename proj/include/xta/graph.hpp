#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "xta/vertex_set.hpp"

namespace xta {

struct VertexDegree {
  int vertex;
  int degree;

  friend bool operator==(const VertexDegree&, const VertexDegree&) = default;
};

// Undirected simple graph over 0..n-1. Adjacency is fixed after construction;
// the alive mask selects the induced subgraph currently in view, so solvers can
// delete and restore vertices without copying adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const noexcept { return n_; }

  /// Adds {u, v}. Self-loops and out-of-range endpoints throw ContractViolation.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adjacency_[static_cast<std::size_t>(u)].test(v); }

  /// Raw adjacency, ignoring the alive mask.
  const VertexSet& adjacency(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  /// N(v) restricted to alive vertices.
  VertexSet neighbors(int v) const { return adjacency(v) & alive_; }
  int degree(int v) const { return adjacency(v).count_common(alive_); }

  const VertexSet& alive() const noexcept { return alive_; }
  int alive_count() const noexcept { return alive_.count(); }
  bool is_alive(int v) const { return alive_.test(v); }

  // Mask operations. These are the only mutators besides add_edge.
  void remove_vertex(int v) { alive_.reset(v); }
  void remove_vertices(const VertexSet& xs) { alive_ -= xs; }
  /// Replaces the alive mask wholesale (used to restore state on backtrack).
  void set_alive(VertexSet mask);

  /// G[X] as a view: same adjacency, alive mask X. X must be a subset of alive().
  Graph induced_subgraph(const VertexSet& subset) const;

  /// Alive vertex of maximum alive-degree, smallest index on ties.
  std::optional<VertexDegree> max_degree_vertex() const;
  /// Alive vertex of minimum alive-degree, smallest index on ties.
  std::optional<VertexDegree> min_degree_vertex() const;
  int max_degree() const;

  bool is_independent(const VertexSet& set) const;
  int edge_count() const;
  /// Alive edges as (u, v) with u < v, lexicographically ordered.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  std::vector<VertexSet> adjacency_;
  VertexSet alive_;
};

// Hypergraph with edges of size 1..k over 0..n-1. Edges are stored sorted and
// may repeat.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  /// Validates range, size in [1, k] and distinct members; stores the edge sorted.
  void add_edge(std::vector<int> vertices);

  const std::vector<std::vector<int>>& edges() const noexcept { return edges_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  /// Number of edges containing v.
  int degree(int v) const;
  int max_degree() const;
  std::vector<int> degrees() const;

  bool is_cover(const VertexSet& cover) const;
  /// Edges as bit vectors over 0..n-1.
  std::vector<VertexSet> edge_sets() const;

  /// The alive edges of a graph as a 2-uniform hypergraph on the same vertex range.
  static Hypergraph from_graph(const Graph& graph);

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<std::vector<int>> edges_;
};

}  // namespace xta
