#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "xta/coloring.hpp"
#include "xta/graph.hpp"

namespace xta {

// One benchmark row. Optional fields are empty in CSV and null in JSON when
// they do not apply to the solver or were not computed.
//
// ratio = oracle / result for independent set solvers and result / oracle for
// coloring and vertex cover, so it is >= 1 whenever both are present.
// nodes counts search nodes: branching calls for branch_is/boosted_is, exact
// search nodes for partition_is/exact_is, inner branching calls for coloring,
// and sparsified branches for vc.
struct BenchRecord {
  std::string instance;
  std::string generator;
  int n = 0;
  std::string solver;
  std::optional<double> r;
  std::optional<double> p;
  std::optional<int> d;
  std::string leaf;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<int> result;
  std::optional<int> oracle;
  std::optional<double> ratio;
  std::optional<std::uint64_t> nodes;
  std::optional<double> node_bound;
  std::optional<bool> over_bound;
  long long elapsed_us = 0;
  std::string error;

  /// Field-wise equality ignoring elapsed_us.
  bool same_outcome(const BenchRecord& other) const;
};

struct OracleOptions {
  int independent_set_cap = 25;
  int vertex_cover_cap = 25;
  int chromatic_cap = 12;
  bool force = false;  // compute oracles above the caps
};

// Solver selection and parameters shared by the CLI and suite rows.
//   branch_is | boosted_is   randomized branching (p, d, leaf, trials, seed)
//   partition_is             block partition baseline with r blocks
//   greedy_is | exact_is     leaf solvers run on the whole graph
//   coloring                 peeling coloring with ratio r (wrapped unless raw)
//   vc                       sparsify-then-cover with threshold d and leaf exact|matching
struct SolverSpec {
  std::string name = "branch_is";
  double p = 2.0;
  int d = 4;
  std::string leaf = "exact";
  int trials = 1;
  std::uint64_t seed = 0;
  std::optional<double> r;
  bool raw = false;
  int inner_trials = 1;
};

/// Default degree threshold for branch denominator p: max(ceil(2p), 4).
int default_degree_threshold(double p);

struct IsRun {
  BenchRecord record;
  VertexSet set;
};
struct ColoringRun {
  BenchRecord record;
  Coloring coloring;
};
struct VcRun {
  BenchRecord record;
  VertexSet cover;
};

/// Runs an independent set solver. known_oracle, when given, is used instead of
/// an exact solve.
IsRun run_is_solver(const Graph& graph, const SolverSpec& spec, const OracleOptions& oracle,
                    std::optional<int> known_oracle = std::nullopt);
ColoringRun run_coloring_solver(const Graph& graph, const SolverSpec& spec,
                                const OracleOptions& oracle);
VcRun run_vc_solver(const Hypergraph& hypergraph, const SolverSpec& spec,
                    const OracleOptions& oracle);

// Suite files hold one JSON object per line (blank and '#' lines ignored):
//   {"id": "g25", "instance": {"gen": "gnp", "n": 25, "p": 0.3, "seed": [1, 2, 3]},
//    "solvers": [{"solver": "boosted_is", "p": 4, "d": 8, "leaf": "exact", "trials": 1, "seed": 7},
//                {"solver": "partition_is", "r": 4}]}
// Instance generators: gnp(n, p, seed), planted(n, s, p, seed), hyper(n, m, k, seed),
// csp(n_vars, m, arity, acc, seed) reduced to its conflict graph, and
// file(path, format = col | hedge | csp). Any scalar instance or solver field may
// be a JSON array; the line expands to the cartesian product.
struct SuiteJob {
  std::string instance_id;
  nlohmann::json instance;  // scalar fields only
  nlohmann::json solver;    // scalar fields only
};

/// InputError (with line number) on malformed lines.
std::vector<SuiteJob> parse_suite(std::istream& in);

/// One record per job, in job order. Failures become error rows.
std::vector<BenchRecord> run_suite(const std::vector<SuiteJob>& jobs, const OracleOptions& oracle);

std::string bench_csv_header();
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> read_bench_csv(std::istream& in);

nlohmann::json to_json(const BenchRecord& record);

/// Shortest decimal that round-trips the double.
std::string format_number(double value);

}  // namespace xta
