#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xta/graph.hpp"

namespace xta {

/// Min-degree greedy: take a minimum alive-degree vertex (smallest index on
/// ties), drop its closed neighborhood, repeat. Size >= n / (maxdeg + 1).
VertexSet greedy_is(const Graph& graph);

/// Maximum independent set of the alive subgraph. Branches include/exclude on a
/// maximum-degree vertex; vertices of degree <= 1 are taken greedily.
VertexSet exact_mis(const Graph& graph);
/// As exact_mis, also adding the number of search nodes visited to `nodes`.
VertexSet exact_mis(const Graph& graph, std::uint64_t& nodes);

/// The lexicographically first independent set of exactly `size` alive
/// vertices, or nullopt when alpha(G) < size.
std::optional<VertexSet> enumerate_is_of_size(const Graph& graph, int size);

/// Minimum-cardinality vertex cover by branch and bound over uncovered edges.
VertexSet exact_vc(const Hypergraph& hypergraph);

/// Takes every vertex of the lowest-indexed uncovered edge until all edges are
/// covered. A k-approximation.
VertexSet matching_vc(const Hypergraph& hypergraph);

// Solver applied once the branching has reduced the maximum degree below the
// threshold. advertised_ratio(d) is the approximation factor the backend can
// prove on graphs of maximum degree d.
class LeafIsSolver {
 public:
  virtual ~LeafIsSolver() = default;

  virtual std::string_view name() const = 0;
  virtual VertexSet solve(const Graph& graph) const = 0;
  virtual double advertised_ratio(int max_degree) const = 0;
};

/// `exact`, `greedy` or `enum`; anything else throws InputError.
std::unique_ptr<LeafIsSolver> make_leaf_solver(std::string_view name);
std::vector<std::string> leaf_solver_names();

}  // namespace xta
