#include "xta/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "xta/bench.hpp"
#include "xta/branching_is.hpp"
#include "xta/coloring.hpp"
#include "xta/errors.hpp"
#include "xta/fglss.hpp"
#include "xta/generators.hpp"
#include "xta/io.hpp"

namespace xta {

using nlohmann::json;

namespace {

json one_based(const VertexSet& set) {
  json out = json::array();
  set.for_each([&](int v) { out.push_back(v + 1); });
  return out;
}

std::string file_generator(const std::string& path) { return "file(path=" + path + ")"; }

std::string instance_id(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

// Writes to the named file, or to `out` for "" and "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

void emit_records(std::ostream& out, const std::string& format, std::vector<BenchRecord> records,
                  json payload) {
  if (format == "csv") {
    write_bench_csv(out, records);
  } else {
    out << payload.dump() << '\n';
  }
}

// First "p <kind> ..." header token, lowercase as written.
std::string header_kind(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag, kind;
    if (ls >> tag && tag == "p" && ls >> kind) return kind;
  }
  return {};
}

struct GenArgs {
  std::string kind;
  int n = 20;
  double p = 0.5;
  int s = 5;
  int m = 20;
  int k = 3;
  int arity = 2;
  int acc = 2;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  std::ostringstream text;
  std::ostringstream params;
  if (a.kind == "gnp") {
    params << "gnp n=" << a.n << " p=" << format_number(a.p) << " seed=" << a.seed;
    write_dimacs_col(text, gen_gnp(a.n, a.p, a.seed), {params.str()});
  } else if (a.kind == "planted") {
    params << "planted n=" << a.n << " s=" << a.s << " p=" << format_number(a.p) << " seed=" << a.seed;
    const PlantedInstance inst = gen_planted_is(a.n, a.s, a.p, a.seed);
    write_dimacs_col(text, inst.graph, {params.str(), "planted independent set: vertices 1.." + std::to_string(a.s)});
  } else if (a.kind == "hyper") {
    params << "c hyper n=" << a.n << " m=" << a.m << " k=" << a.k << " seed=" << a.seed << '\n';
    text << params.str();
    write_hypergraph(text, gen_random_hypergraph(a.n, a.m, a.k, a.seed));
  } else {
    params << "c csp vars=" << a.n << " m=" << a.m << " arity=" << a.arity << " acc=" << a.acc
           << " seed=" << a.seed << '\n';
    text << params.str();
    write_csp(text, gen_random_csp(a.n, a.m, a.arity, a.acc, a.seed));
  }
  emit(a.out, text.str(), out);
  return 0;
}

struct IsArgs {
  std::string input;
  std::optional<double> r;
  std::optional<double> p;
  std::optional<int> d;
  std::string leaf = "exact";
  std::optional<int> trials;
  std::uint64_t seed = 0;
  std::string baseline = "none";
  std::string format = "json";
  bool force_oracle = false;
};

int run_solve_is(const IsArgs& a, std::ostream& out) {
  const Graph graph = parse_dimacs_col(read_text_file(a.input));
  SolverSpec spec;
  spec.r = a.r;
  spec.p = a.p ? *a.p : a.r ? *a.r : 2.0;
  spec.d = a.d ? *a.d : default_degree_threshold(spec.p);
  spec.leaf = a.leaf;
  spec.trials = a.trials ? *a.trials : a.r ? boosted_trial_count(*a.r) : 1;
  spec.seed = a.seed;
  spec.name = spec.trials > 1 ? "boosted_is" : "branch_is";
  OracleOptions oracle;
  oracle.force = a.force_oracle;

  IsRun run = run_is_solver(graph, spec, oracle);
  run.record.instance = instance_id(a.input);
  run.record.generator = file_generator(a.input);
  std::vector<BenchRecord> records{run.record};
  json payload = to_json(run.record);
  payload["set"] = one_based(run.set);

  if (a.baseline == "partition") {
    SolverSpec base;
    base.name = "partition_is";
    base.r = a.r ? std::ceil(*a.r) : std::ceil(spec.p);
    IsRun b = run_is_solver(graph, base, oracle, run.record.oracle);
    b.record.instance = run.record.instance;
    b.record.generator = run.record.generator;
    records.push_back(b.record);
    payload["baseline"] = to_json(b.record);
    payload["baseline"]["set"] = one_based(b.set);
  }
  emit_records(out, a.format, records, payload);
  return 0;
}

struct ColoringArgs {
  std::string input;
  double r = 6.0;
  std::uint64_t seed = 0;
  bool raw = false;
  int inner_trials = 1;
  std::string format = "json";
  bool force_oracle = false;
};

int run_solve_coloring(const ColoringArgs& a, std::ostream& out) {
  const Graph graph = parse_dimacs_col(read_text_file(a.input));
  SolverSpec spec;
  spec.name = "coloring";
  spec.r = a.r;
  spec.seed = a.seed;
  spec.raw = a.raw;
  spec.inner_trials = a.inner_trials;
  OracleOptions oracle;
  oracle.force = a.force_oracle;

  ColoringRun run = run_coloring_solver(graph, spec, oracle);
  run.record.instance = instance_id(a.input);
  run.record.generator = file_generator(a.input);
  json payload = to_json(run.record);
  payload["classes"] = json::array();
  for (const auto& c : run.coloring.classes) payload["classes"].push_back(one_based(c));
  emit_records(out, a.format, {run.record}, payload);
  return 0;
}

struct VcArgs {
  std::string input;
  int d = 4;
  std::string leaf = "exact";
  std::string format = "json";
  bool force_oracle = false;
};

int run_solve_vc(const VcArgs& a, std::ostream& out) {
  const std::string text = read_text_file(a.input);
  const Hypergraph h = header_kind(text) == "hedge" ? parse_hypergraph(text)
                                                    : Hypergraph::from_graph(parse_dimacs_col(text));
  SolverSpec spec;
  spec.name = "vc";
  spec.d = a.d;
  spec.leaf = a.leaf;
  OracleOptions oracle;
  oracle.force = a.force_oracle;

  VcRun run = run_vc_solver(h, spec, oracle);
  run.record.instance = instance_id(a.input);
  run.record.generator = file_generator(a.input);
  json payload = to_json(run.record);
  payload["cover"] = one_based(run.cover);
  emit_records(out, a.format, {run.record}, payload);
  return 0;
}

struct ReduceArgs {
  std::string input;
  std::string out;
  std::string labels;
};

int run_reduce(const ReduceArgs& a, std::ostream& out) {
  const Csp csp = parse_csp(read_text_file(a.input));
  const FglssGraph reduced = fglss_reduce(csp);
  std::ostringstream col;
  write_dimacs_col(col, reduced.graph, {"conflict graph of " + a.input});
  emit(a.out, col.str(), out);
  if (!a.labels.empty()) {
    std::ostringstream labels;
    write_fglss_labels(labels, csp, reduced);
    write_text_file(a.labels, labels.str());
  }
  if (!a.out.empty() && a.out != "-") {
    json summary;
    summary["vertices"] = reduced.graph.n();
    summary["edges"] = reduced.graph.edge_count();
    summary["predicates"] = csp.m();
    summary["freeness"] = freeness(csp);
    out << summary.dump() << '\n';
  }
  return 0;
}

struct BenchArgs {
  std::string suite;
  std::string out = "-";
  bool force_oracle = false;
  int is_cap = 25;
  int vc_cap = 25;
  int chi_cap = 12;
};

int run_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::istringstream in(read_text_file(a.suite));
  const std::vector<SuiteJob> jobs = parse_suite(in);
  OracleOptions oracle;
  oracle.force = a.force_oracle;
  oracle.independent_set_cap = a.is_cap;
  oracle.vertex_cover_cap = a.vc_cap;
  oracle.chromatic_cap = a.chi_cap;
  const std::vector<BenchRecord> records = run_suite(jobs, oracle);

  std::ostringstream csv;
  write_bench_csv(csv, records);
  emit(a.out, csv.str(), out);

  const auto errors = std::count_if(records.begin(), records.end(),
                                    [](const BenchRecord& r) { return !r.error.empty(); });
  const auto over = std::count_if(records.begin(), records.end(),
                                  [](const BenchRecord& r) { return r.over_bound.value_or(false); });
  err << records.size() << " rows, " << errors << " errors, " << over << " over node bound\n";
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomized sparsifying branching for independent set, coloring and vertex cover"};
  app.name("xta");
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("kind", gen.kind, "gnp | planted | hyper | csp")
      ->required()
      ->check(CLI::IsMember({"gnp", "planted", "hyper", "csp"}));
  gen_cmd->add_option("--n", gen.n, "Vertices (variables for csp)")->capture_default_str();
  gen_cmd->add_option("--p", gen.p, "Edge probability")->capture_default_str();
  gen_cmd->add_option("--s", gen.s, "Planted independent set size")->capture_default_str();
  gen_cmd->add_option("--m", gen.m, "Hyperedges or predicates")->capture_default_str();
  gen_cmd->add_option("--k", gen.k, "Maximum hyperedge size")->capture_default_str();
  gen_cmd->add_option("--arity", gen.arity, "Predicate arity")->capture_default_str();
  gen_cmd->add_option("--acc", gen.acc, "Accepting assignments per predicate")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  IsArgs is;
  auto* is_cmd = app.add_subcommand("solve-is", "Approximate a maximum independent set");
  is_cmd->add_option("--input", is.input, "DIMACS .col graph")->required();
  is_cmd->add_option("--r", is.r,
                     "Target ratio; sets p = r and trials = ceil(3r) unless given explicitly");
  is_cmd->add_option("--p", is.p, "Include-branch denominator (default 2, or r)");
  is_cmd->add_option("--d", is.d, "Degree threshold (default max(ceil(2p), 4))");
  is_cmd->add_option("--leaf", is.leaf, "Leaf solver")
      ->check(CLI::IsMember({"exact", "greedy", "enum"}))
      ->capture_default_str();
  is_cmd->add_option("--trials", is.trials, "Independent runs; the best is kept");
  is_cmd->add_option("--seed", is.seed, "Seed")->capture_default_str();
  is_cmd->add_option("--baseline", is.baseline, "Also run the block partition baseline with ceil(r) blocks")
      ->check(CLI::IsMember({"none", "partition"}))
      ->capture_default_str();
  is_cmd->add_option("--format", is.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  is_cmd->add_flag("--force-oracle", is.force_oracle, "Compute the exact optimum above 25 vertices");

  ColoringArgs col;
  auto* col_cmd = app.add_subcommand("solve-coloring", "Approximate a minimum coloring");
  col_cmd->add_option("--input", col.input, "DIMACS .col graph")->required();
  col_cmd->add_option("--r", col.r,
                      "Target ratio. The peeling runs with r - 2 (r as given with --raw), which must "
                      "exceed 1.5596, the root of r log2 r = 1")
      ->capture_default_str();
  col_cmd->add_option("--seed", col.seed, "Seed")->capture_default_str();
  col_cmd->add_flag("--raw", col.raw, "Peel with r itself");
  col_cmd->add_option("--inner-trials", col.inner_trials, "Independent set runs per peel")
      ->capture_default_str();
  col_cmd->add_option("--format", col.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  col_cmd->add_flag("--force-oracle", col.force_oracle, "Compute chi above 12 vertices (up to 20)");

  VcArgs vc;
  auto* vc_cmd = app.add_subcommand("solve-vc", "Vertex cover by degree sparsification");
  vc_cmd->add_option("--input", vc.input, "Hypergraph (p hedge) or DIMACS .col graph")->required();
  vc_cmd->add_option("--d", vc.d, "Residual degree bound")->capture_default_str();
  vc_cmd->add_option("--leaf", vc.leaf, "Residual cover solver")
      ->check(CLI::IsMember({"exact", "matching"}))
      ->capture_default_str();
  vc_cmd->add_option("--format", vc.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  vc_cmd->add_flag("--force-oracle", vc.force_oracle, "Compute the exact optimum above 25 vertices");
  vc_cmd->footer(
      "For a target ratio k - 1/r on k-uniform hypergraphs the classical choice is\n"
      "eps = k / (k r)^(k r) and d = (k / eps)^(3k). Those values are astronomically\n"
      "large at any real size, so --d is taken directly.");

  ReduceArgs red;
  auto* red_cmd = app.add_subcommand("reduce-fglss", "CSP to conflict graph");
  red_cmd->add_option("--input", red.input, "CSP text file")->required();
  red_cmd->add_option("--out", red.out, "DIMACS output (default stdout)");
  red_cmd->add_option("--labels", red.labels, "Vertex label sidecar: vertex predicate bits");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a suite file and write CSV");
  bench_cmd->add_option("--suite", bench.suite, "One JSON object per line")->required();
  bench_cmd->add_option("--out", bench.out, "CSV output (default stdout)");
  bench_cmd->add_flag("--force-oracle", bench.force_oracle, "Compute oracles above the caps");
  bench_cmd->add_option("--is-cap", bench.is_cap, "Oracle cap for independent set")->capture_default_str();
  bench_cmd->add_option("--vc-cap", bench.vc_cap, "Oracle cap for vertex cover")->capture_default_str();
  bench_cmd->add_option("--chi-cap", bench.chi_cap, "Oracle cap for chromatic number")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (is_cmd->parsed()) return run_solve_is(is, out);
    if (col_cmd->parsed()) return run_solve_coloring(col, out);
    if (vc_cmd->parsed()) return run_solve_vc(vc, out);
    if (red_cmd->parsed()) return run_reduce(red, out);
    if (bench_cmd->parsed()) return run_bench(bench, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace xta
