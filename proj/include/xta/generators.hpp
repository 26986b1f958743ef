#pragma once

#include <cstdint>

#include "xta/graph.hpp"

namespace xta {

/// G(n, p): every unordered pair independently with probability p.
Graph gen_gnp(int n, double p, std::uint64_t seed);

struct PlantedInstance {
  Graph graph;
  VertexSet planted;
};

/// Vertices 0..s-1 are independent; every other pair appears with probability p.
PlantedInstance gen_planted_is(int n, int s, double p, std::uint64_t seed);

/// m edges, each with a uniformly random size in [min(2, k), k] and distinct
/// uniformly random members.
Hypergraph gen_random_hypergraph(int n, int m, int k, std::uint64_t seed);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Center 0, leaves 1..leaves.
Graph star_graph(int leaves);
Graph petersen_graph();
/// Disjoint edges {2i, 2i+1}.
Graph perfect_matching_graph(int pairs);

}  // namespace xta
