#include "xta/branching_is.hpp"

#include <cmath>
#include <vector>

#include "xta/errors.hpp"
#include "xta/parallel.hpp"
#include "xta/random.hpp"

namespace xta {

void SolveConfig::validate() const {
  require(p >= 1.0, "branch probability denominator p must be >= 1");
  require(d >= 1, "degree threshold d must be >= 1");
  require(trials >= 1, "trial count must be >= 1");
}

RunStats& RunStats::operator+=(const RunStats& other) {
  nodes += other.nodes;
  leaves += other.leaves;
  include_branches_taken += other.include_branches_taken;
  elapsed += other.elapsed;
  return *this;
}

bool RunStats::same_work(const RunStats& other) const {
  return nodes == other.nodes && leaves == other.leaves &&
         include_branches_taken == other.include_branches_taken;
}

double compute_lambda(int d, double p) {
  require(p >= 1.0, "branch probability denominator p must be >= 1");
  require(d >= 2.0 * p,
          "node bound requires degree threshold d >= 2p (got d = " + std::to_string(d) +
              ", p = " + std::to_string(p) + ")");
  return std::log2(4.0 * d / p) / d;
}

double node_bound(int n, int d, double p) {
  require(n >= 0, "vertex count must be non-negative");
  return std::exp2(compute_lambda(d, p) * n);
}

namespace {

class Brancher {
 public:
  Brancher(const Graph& graph, const SolveConfig& cfg, std::uint64_t seed)
      : work_(graph), leaf_(make_leaf_solver(cfg.leaf)), stream_(mix64(seed)), cfg_(cfg) {}

  VertexSet solve() {
    const std::uint64_t index = stats_.nodes++;
    const auto top = work_.max_degree_vertex();
    if (!top || top->degree < cfg_.d) {
      ++stats_.leaves;
      return leaf_->solve(work_);
    }
    const int v = top->vertex;
    const bool include = one_in(stream_.at(index), cfg_.p);
    const VertexSet saved = work_.alive();

    work_.remove_vertex(v);
    VertexSet without = solve();
    if (include) {
      ++stats_.include_branches_taken;
      work_.set_alive(saved);
      VertexSet closed = work_.neighbors(v);
      closed.set(v);
      work_.remove_vertices(closed);
      VertexSet with = solve();
      with.set(v);
      work_.set_alive(saved);
      if (with.count() > without.count()) return with;
    }
    work_.set_alive(saved);
    return without;
  }

  const RunStats& stats() const { return stats_; }

 private:
  Graph work_;
  std::unique_ptr<LeafIsSolver> leaf_;
  CounterStream stream_;
  const SolveConfig& cfg_;
  RunStats stats_;
};

}  // namespace

IsResult branch_is(const Graph& graph, const SolveConfig& cfg, std::uint64_t seed) {
  require(cfg.p >= 1.0, "branch probability denominator p must be >= 1");
  require(cfg.d >= 1, "degree threshold d must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  Brancher brancher(graph, cfg, seed);
  IsResult result{brancher.solve(), brancher.stats()};
  result.stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

IsResult boosted_is(const Graph& graph, const SolveConfig& cfg) {
  cfg.validate();
  make_leaf_solver(cfg.leaf);  // reject unknown names before spawning work
  const auto start = std::chrono::steady_clock::now();
  std::vector<IsResult> runs(static_cast<std::size_t>(cfg.trials));
  parallel_for(runs.size(), [&](std::size_t t) {
    runs[t] = branch_is(graph, cfg, cfg.seed ^ static_cast<std::uint64_t>(t));
  });
  IsResult best{runs.front().set, {}};
  for (const auto& run : runs) {
    if (run.set.count() > best.set.count()) best.set = run.set;
    best.stats += run.stats;
  }
  best.stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return best;
}

int boosted_trial_count(double r) {
  require(r >= 1.0, "approximation target r must be >= 1");
  return static_cast<int>(std::ceil(3.0 * r));
}

double certified_ratio(const SolveConfig& cfg) {
  const auto leaf = make_leaf_solver(cfg.leaf);
  return std::max(cfg.p, leaf->advertised_ratio(cfg.d - 1));
}

PartitionResult partition_baseline_is(const Graph& graph, int r) {
  const std::vector<int> vertices = graph.alive().to_vector();
  const int n = static_cast<int>(vertices.size());
  require(r >= 1 && r <= n, "partition block count r must satisfy 1 <= r <= n (r = " +
                                std::to_string(r) + ", n = " + std::to_string(n) + ")");
  PartitionResult result{VertexSet(graph.n()), r, 0, 0};
  const int base = n / r;
  const int extra = n % r;
  int offset = 0;
  bool first = true;
  for (int b = 0; b < r; ++b) {
    const int size = base + (b < extra ? 1 : 0);
    VertexSet block(graph.n());
    for (int i = offset; i < offset + size; ++i) block.set(vertices[static_cast<std::size_t>(i)]);
    offset += size;
    result.largest_block = std::max(result.largest_block, size);
    VertexSet local = exact_mis(graph.induced_subgraph(block), result.exact_nodes);
    if (first || local.count() > result.set.count()) {
      result.set = std::move(local);
      first = false;
    }
  }
  return result;
}

}  // namespace xta
