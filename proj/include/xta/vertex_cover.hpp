#pragma once

#include <string_view>
#include <vector>

#include "xta/graph.hpp"

namespace xta {

struct SparsifiedBranch {
  VertexSet forced;     // committed to the cover on this branch
  Hypergraph residual;  // remaining edges, every vertex of degree < d
};

// Output of degree sparsification. For every X ⊆ V:
//   X covers H  <=>  some branch has X ⊇ forced and X \ forced covering residual.
struct SparsifiedFamily {
  std::vector<SparsifiedBranch> branches;
  int d = 0;

  int branch_count() const noexcept { return static_cast<int>(branches.size()); }
};

/// Branches on a maximum-degree vertex v (smallest index on ties) while its
/// degree is >= d: first v joins the cover, then v is excluded and deleted from
/// its edges. Size-1 edges force their vertex, to fixpoint; a branch that empties
/// an edge is dropped. Duplicate residual edges are merged. Requires d >= 2.
SparsifiedFamily sparsify_vc(const Hypergraph& hypergraph, int d);

struct VcPipelineResult {
  VertexSet cover;
  int branches = 0;
  int best_branch = -1;
};

/// Sparsifies, covers each residual with the leaf (`exact` or `matching`) and
/// returns the smallest forced ∪ leaf cover, earliest branch on ties.
VcPipelineResult vc_pipeline(const Hypergraph& hypergraph, int d, std::string_view leaf);

/// k - k(k-1) ln ln D / ln D: the ratio a low-degree hypergraph vertex cover
/// approximation with the (1 - o(1)) factor dropped would give at maximum
/// degree D. Reported for context only. Requires D >= 16.
double low_degree_vc_ratio_estimate(int k, long long max_degree);

}  // namespace xta
