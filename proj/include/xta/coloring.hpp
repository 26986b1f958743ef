#pragma once

#include <cstdint>
#include <vector>

#include "xta/branching_is.hpp"
#include "xta/graph.hpp"

namespace xta {

/// Ordered color classes C_1..C_l.
struct Coloring {
  std::vector<VertexSet> classes;

  int size() const noexcept { return static_cast<int>(classes.size()); }
};

/// Nonempty, pairwise disjoint classes covering exactly the alive vertices, each
/// independent in the graph.
bool verify_coloring(const Graph& graph, const Coloring& coloring);

inline constexpr int kMaxOptcolVertices = 20;
inline constexpr int kMaxBruteforceColoringVertices = 16;

/// chi(G) from the covering-count identity: the least k with
/// sum_{S ⊆ V} (-1)^{|V \ S|} i(S)^k > 0, i(S) the number of independent sets
/// inside S. Evaluated in exact 512-bit arithmetic. At most kMaxOptcolVertices
/// alive vertices.
int chromatic_number(const Graph& graph);

/// An optimum coloring. Classes are peeled one at a time: a maximal
/// independent set through the lowest remaining vertex whose removal leaves a
/// (k-1)-colorable residual, checked with the same counting identity.
Coloring optcol(const Graph& graph);

/// Independent oracle: least k admitting a proper k-coloring, by backtracking.
/// At most kMaxBruteforceColoringVertices alive vertices.
int chromatic_bruteforce(const Graph& graph);

/// Infimum of admissible peeling ratios: the root of r*log2(r) = 1 (about 1.5596).
double min_coloring_ratio();
/// r*log2(r) > 1 and r / ln(r*log2(r)) >= 1.
bool coloring_ratio_admissible(double r);

struct PeelingPlan {
  double threshold;  // keep peeling while |V| >= threshold = n / (r log2 r)
  SolveConfig inner; // independent set configuration for each peel
};

/// Peel threshold and inner branching parameters for ratio r on n vertices:
/// p = max(1, r / ln(r log2 r)), d = max(ceil(2p), 4), exact leaves.
PeelingPlan peeling_plan(int n, double r, int inner_trials = 1);

struct ColoringResult {
  Coloring coloring;
  RunStats stats;      // summed over the inner independent set calls
  int peeled = 0;      // classes produced by peeling, before the exact finish
};

/// Iterative peeling: while at least n/(r log2 r) vertices remain, remove an
/// approximately maximum independent set as a new class; color the residual
/// optimally. Peel c draws its randomness from seed combined with c.
ColoringResult chr_approx(const Graph& graph, double r, std::uint64_t seed, int inner_trials = 1);

/// chr_approx with ratio r - 2, so that the class count is bounded by r * chi(G).
ColoringResult chr_approx_wrapped(const Graph& graph, double r, std::uint64_t seed,
                                  int inner_trials = 1);

}  // namespace xta
