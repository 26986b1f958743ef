#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "xta/graph.hpp"
#include "xta/leaf_solvers.hpp"

namespace xta {

// Parameters of the randomized sparsifying branching.
//   p      the include branch is explored with probability 1/p (p >= 1)
//   d      branching continues while some vertex has degree >= d
//   leaf   leaf solver name applied once the maximum degree is below d
//   trials independent repetitions for boosted_is
//   seed   master seed
struct SolveConfig {
  double p = 2.0;
  int d = 4;
  std::string leaf = "exact";
  int trials = 1;
  std::uint64_t seed = 0;

  /// Throws ContractViolation unless p >= 1, d >= 1, trials >= 1.
  void validate() const;
};

struct RunStats {
  std::uint64_t nodes = 0;  // every call of the recursive procedure, leaves included
  std::uint64_t leaves = 0;
  std::uint64_t include_branches_taken = 0;
  std::chrono::microseconds elapsed{0};

  RunStats& operator+=(const RunStats& other);
  /// Equality ignoring elapsed time.
  bool same_work(const RunStats& other) const;
};

struct IsResult {
  VertexSet set;
  RunStats stats;
};

/// Branching exponent log2(4d/p)/d, so that 2^(-lambda*d) = p/(4d).
/// Requires d >= 2p.
double compute_lambda(int d, double p);

/// Expected-node-count bound 2^(lambda*n).
double node_bound(int n, int d, double p);

/// One run of the randomized branching. Each branching node draws one value
/// from a counter stream keyed by `seed`, indexed by the node's preorder
/// number, so the run is a deterministic function of (graph, cfg, seed).
/// cfg.seed and cfg.trials are ignored here.
IsResult branch_is(const Graph& graph, const SolveConfig& cfg, std::uint64_t seed);
inline IsResult branch_is(const Graph& graph, const SolveConfig& cfg) {
  return branch_is(graph, cfg, cfg.seed);
}

/// Best of cfg.trials runs; trial t uses seed cfg.seed ^ t. The earliest trial
/// wins ties. Stats are summed over trials; elapsed is wall time.
IsResult boosted_is(const Graph& graph, const SolveConfig& cfg);

/// Repetition count for boosting toward an r-approximation: ceil(3r).
int boosted_trial_count(double r);

/// Ratio the branching certifies in expectation: max(p, rho_leaf(d - 1)).
double certified_ratio(const SolveConfig& cfg);

struct PartitionResult {
  VertexSet set;
  int blocks = 0;
  int largest_block = 0;
  std::uint64_t exact_nodes = 0;  // summed search nodes of the per-block exact solves
};

/// Splits the alive vertices (by index) into r contiguous blocks whose sizes
/// differ by at most one, solves each block exactly and returns the largest.
PartitionResult partition_baseline_is(const Graph& graph, int r);

}  // namespace xta
