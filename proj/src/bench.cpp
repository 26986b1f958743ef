#include "xta/bench.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "xta/branching_is.hpp"
#include "xta/errors.hpp"
#include "xta/fglss.hpp"
#include "xta/generators.hpp"
#include "xta/io.hpp"
#include "xta/leaf_solvers.hpp"
#include "xta/parallel.hpp"
#include "xta/vertex_cover.hpp"

namespace xta {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

long long micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

// 0/0 counts as an exact answer.
std::optional<double> ratio_of(double numerator, double denominator) {
  if (numerator == 0 && denominator == 0) return 1.0;
  if (denominator == 0) return std::nullopt;
  return numerator / denominator;
}

void set_bound(BenchRecord& rec, double bound) {
  rec.node_bound = bound;
  if (rec.nodes) rec.over_bound = static_cast<double>(*rec.nodes) > bound;
}

}  // namespace

bool BenchRecord::same_outcome(const BenchRecord& o) const {
  return instance == o.instance && generator == o.generator && n == o.n && solver == o.solver &&
         r == o.r && p == o.p && d == o.d && leaf == o.leaf && trials == o.trials &&
         seed == o.seed && result == o.result && oracle == o.oracle && ratio == o.ratio &&
         nodes == o.nodes && node_bound == o.node_bound && over_bound == o.over_bound &&
         error == o.error;
}

int default_degree_threshold(double p) {
  return std::max(static_cast<int>(std::ceil(2.0 * p)), 4);
}

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

IsRun run_is_solver(const Graph& graph, const SolverSpec& spec, const OracleOptions& oracle,
                    std::optional<int> known_oracle) {
  IsRun run;
  BenchRecord& rec = run.record;
  rec.n = graph.alive_count();
  rec.solver = spec.name;
  rec.r = spec.r;

  const auto start = Clock::now();
  if (spec.name == "branch_is" || spec.name == "boosted_is") {
    SolveConfig cfg;
    cfg.p = spec.p;
    cfg.d = spec.d;
    cfg.leaf = spec.leaf;
    cfg.trials = spec.name == "branch_is" ? 1 : spec.trials;
    cfg.seed = spec.seed;
    cfg.validate();
    make_leaf_solver(cfg.leaf);
    const IsResult res = spec.name == "branch_is" ? branch_is(graph, cfg) : boosted_is(graph, cfg);
    rec.elapsed_us = micros_since(start);
    run.set = res.set;
    rec.p = cfg.p;
    rec.d = cfg.d;
    rec.leaf = cfg.leaf;
    rec.trials = cfg.trials;
    rec.seed = cfg.seed;
    rec.nodes = res.stats.nodes;
    if (cfg.d >= 2.0 * cfg.p) set_bound(rec, cfg.trials * node_bound(rec.n, cfg.d, cfg.p));
  } else if (spec.name == "partition_is") {
    if (!spec.r) throw InputError("partition_is needs r");
    const int blocks = static_cast<int>(*spec.r);
    if (blocks < 1 || blocks != *spec.r) throw InputError("partition_is needs an integer r >= 1");
    const PartitionResult res = partition_baseline_is(graph, blocks);
    rec.elapsed_us = micros_since(start);
    run.set = res.set;
    rec.leaf = "exact";
    rec.nodes = res.exact_nodes;
    const int block = rec.n == 0 ? 0 : (rec.n + blocks - 1) / blocks;
    set_bound(rec, blocks * std::exp2(block));
  } else if (spec.name == "greedy_is") {
    run.set = greedy_is(graph);
    rec.elapsed_us = micros_since(start);
  } else if (spec.name == "exact_is") {
    std::uint64_t nodes = 0;
    run.set = exact_mis(graph, nodes);
    rec.elapsed_us = micros_since(start);
    rec.nodes = nodes;
  } else {
    throw InputError("unknown independent set solver '" + spec.name + "'");
  }
  require(graph.is_independent(run.set), "solver returned a dependent set");
  rec.result = run.set.count();

  if (known_oracle) {
    rec.oracle = known_oracle;
  } else if (rec.n <= oracle.independent_set_cap || oracle.force) {
    rec.oracle = spec.name == "exact_is" ? *rec.result : exact_mis(graph).count();
  }
  if (rec.oracle) rec.ratio = ratio_of(*rec.oracle, *rec.result);
  return run;
}

ColoringRun run_coloring_solver(const Graph& graph, const SolverSpec& spec,
                                const OracleOptions& oracle) {
  if (spec.name != "coloring") throw InputError("unknown coloring solver '" + spec.name + "'");
  ColoringRun run;
  BenchRecord& rec = run.record;
  rec.n = graph.alive_count();
  rec.solver = spec.raw ? "coloring_raw" : "coloring";
  const double r = spec.r.value_or(6.0);
  rec.r = r;
  rec.seed = spec.seed;
  rec.trials = spec.inner_trials;

  const auto start = Clock::now();
  const ColoringResult res = spec.raw ? chr_approx(graph, r, spec.seed, spec.inner_trials)
                                      : chr_approx_wrapped(graph, r, spec.seed, spec.inner_trials);
  rec.elapsed_us = micros_since(start);
  require(verify_coloring(graph, res.coloring), "solver returned an improper coloring");
  run.coloring = res.coloring;
  const PeelingPlan plan = peeling_plan(rec.n, spec.raw ? r : r - 2.0, spec.inner_trials);
  rec.p = plan.inner.p;
  rec.d = plan.inner.d;
  rec.leaf = plan.inner.leaf;
  rec.result = res.coloring.size();
  rec.nodes = res.stats.nodes;

  if (rec.n <= oracle.chromatic_cap && rec.n <= kMaxBruteforceColoringVertices) {
    rec.oracle = chromatic_bruteforce(graph);
  } else if (oracle.force && rec.n <= kMaxOptcolVertices) {
    rec.oracle = chromatic_number(graph);
  }
  if (rec.oracle) rec.ratio = ratio_of(*rec.result, *rec.oracle);
  return run;
}

VcRun run_vc_solver(const Hypergraph& hypergraph, const SolverSpec& spec,
                    const OracleOptions& oracle) {
  if (spec.name != "vc") throw InputError("unknown vertex cover solver '" + spec.name + "'");
  VcRun run;
  BenchRecord& rec = run.record;
  rec.n = hypergraph.n();
  rec.solver = "vc";
  rec.d = spec.d;
  rec.leaf = spec.leaf;

  const auto start = Clock::now();
  const VcPipelineResult res = vc_pipeline(hypergraph, spec.d, spec.leaf);
  rec.elapsed_us = micros_since(start);
  require(hypergraph.is_cover(res.cover), "solver returned a non-cover");
  run.cover = res.cover;
  rec.result = res.cover.count();
  rec.nodes = static_cast<std::uint64_t>(res.branches);

  if (rec.n <= oracle.vertex_cover_cap || oracle.force) {
    rec.oracle = exact_vc(hypergraph).count();
    rec.ratio = ratio_of(*rec.result, *rec.oracle);
  }
  return run;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

const std::set<std::string> kSolverKeys = {"solver", "p", "d", "leaf", "trials",
                                           "seed", "r", "raw", "inner_trials"};
const std::set<std::string> kInstanceKeys = {"gen", "n", "p", "s", "m", "k", "vars",
                                             "arity", "acc", "seed", "path", "format"};

// Cartesian product over array-valued fields.
std::vector<json> expand_grid(const json& object) {
  std::vector<json> points{json::object()};
  for (const auto& [key, value] : object.items()) {
    std::vector<json> next;
    if (value.is_array()) {
      if (value.empty()) throw InputError("field '" + key + "' is an empty list");
      for (const json& point : points) {
        for (const json& option : value) {
          if (option.is_structured()) throw InputError("field '" + key + "' nests a list or object");
          json extended = point;
          extended[key] = option;
          next.push_back(std::move(extended));
        }
      }
    } else {
      if (value.is_object()) throw InputError("field '" + key + "' is an object");
      for (json point : points) {
        point[key] = value;
        next.push_back(std::move(point));
      }
    }
    points = std::move(next);
  }
  return points;
}

void check_keys(const json& object, const std::set<std::string>& allowed, const char* what) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) throw InputError(std::string("unknown ") + what + " field '" + key + "'");
  }
}

const json& field(const json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

long long int_field(const json& object, const char* key) {
  const json& v = field(object, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

int int_field(const json& object, const char* key, int fallback) {
  return object.contains(key) ? static_cast<int>(int_field(object, key)) : fallback;
}

std::uint64_t seed_field(const json& object, const char* key) {
  if (!object.contains(key)) return 0;
  const json& v = object.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) return static_cast<std::uint64_t>(v.get<long long>());
  throw InputError(std::string("field '") + key + "' must be a non-negative integer");
}

double number_field(const json& object, const char* key) {
  const json& v = field(object, key);
  if (!v.is_number()) throw InputError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::string string_field(const json& object, const char* key) {
  const json& v = field(object, key);
  if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_number(v.get<double>());
  return v.dump();
}

struct Instance {
  std::string generator;
  std::optional<Graph> graph;
  std::optional<Hypergraph> hypergraph;
  std::optional<int> known_is_oracle;
};

std::string describe(const json& instance) {
  std::string out = instance.value("gen", std::string("?")) + "(";
  bool first = true;
  for (const auto& [key, value] : instance.items()) {
    if (key == "gen") continue;
    if (!first) out += ';';
    first = false;
    out += key + "=" + scalar_text(value);
  }
  return out + ")";
}

void attach_csp(Instance& inst, const Csp& csp) {
  inst.graph = fglss_reduce(csp).graph;
  if (csp.n_vars <= kMaxBruteforceCspVars) inst.known_is_oracle = csp_val_bruteforce(csp);
}

Instance build_instance(const json& spec) {
  Instance inst;
  inst.generator = describe(spec);
  const std::string gen = string_field(spec, "gen");
  if (gen == "gnp") {
    inst.graph = gen_gnp(static_cast<int>(int_field(spec, "n")), number_field(spec, "p"),
                         seed_field(spec, "seed"));
  } else if (gen == "planted") {
    inst.graph = gen_planted_is(static_cast<int>(int_field(spec, "n")),
                                static_cast<int>(int_field(spec, "s")), number_field(spec, "p"),
                                seed_field(spec, "seed"))
                     .graph;
  } else if (gen == "hyper") {
    inst.hypergraph = gen_random_hypergraph(static_cast<int>(int_field(spec, "n")),
                                            static_cast<int>(int_field(spec, "m")),
                                            static_cast<int>(int_field(spec, "k")),
                                            seed_field(spec, "seed"));
  } else if (gen == "csp") {
    attach_csp(inst, gen_random_csp(static_cast<int>(int_field(spec, "vars")),
                                    static_cast<int>(int_field(spec, "m")),
                                    static_cast<int>(int_field(spec, "arity")),
                                    static_cast<int>(int_field(spec, "acc")), seed_field(spec, "seed")));
  } else if (gen == "file") {
    const std::filesystem::path path = string_field(spec, "path");
    std::string format;
    if (spec.contains("format")) {
      format = string_field(spec, "format");
    } else {
      const std::string ext = path.extension().string();
      format = ext == ".hedge" || ext == ".hg" ? "hedge" : ext == ".csp" ? "csp" : "col";
    }
    const std::string text = read_text_file(path);
    if (format == "col") {
      inst.graph = parse_dimacs_col(text);
    } else if (format == "hedge") {
      inst.hypergraph = parse_hypergraph(text);
    } else if (format == "csp") {
      attach_csp(inst, parse_csp(text));
    } else {
      throw InputError("unknown file format '" + format + "'");
    }
  } else {
    throw InputError("unknown generator '" + gen + "'");
  }
  return inst;
}

SolverSpec build_solver(const json& spec) {
  SolverSpec s;
  s.name = string_field(spec, "solver");
  if (spec.contains("r")) s.r = number_field(spec, "r");
  s.seed = seed_field(spec, "seed");
  if (spec.contains("leaf")) s.leaf = string_field(spec, "leaf");
  if (s.name == "vc") {
    s.d = int_field(spec, "d", 4);
    return s;
  }
  if (s.name == "coloring") {
    if (spec.contains("raw")) {
      if (!spec.at("raw").is_boolean()) throw InputError("field 'raw' must be a boolean");
      s.raw = spec.at("raw").get<bool>();
    }
    s.inner_trials = int_field(spec, "inner_trials", 1);
    return s;
  }
  if (spec.contains("p")) {
    s.p = number_field(spec, "p");
  } else if (s.r) {
    s.p = *s.r;
  }
  s.d = int_field(spec, "d", default_degree_threshold(s.p));
  if (spec.contains("trials")) {
    s.trials = static_cast<int>(int_field(spec, "trials"));
  } else if (s.name == "boosted_is" && s.r) {
    s.trials = boosted_trial_count(*s.r);
  }
  if (s.name == "branch_is" && s.trials != 1) throw InputError("branch_is runs a single trial");
  return s;
}

BenchRecord run_job(const SuiteJob& job, const OracleOptions& oracle) {
  BenchRecord rec;
  std::string generator = describe(job.instance);
  const std::string solver = job.solver.value("solver", std::string());
  try {
    const Instance inst = build_instance(job.instance);
    const SolverSpec spec = build_solver(job.solver);
    if (spec.name == "vc") {
      const Hypergraph h = inst.hypergraph ? *inst.hypergraph : Hypergraph::from_graph(*inst.graph);
      rec = run_vc_solver(h, spec, oracle).record;
    } else {
      if (!inst.graph) throw InputError("solver '" + spec.name + "' needs a graph instance");
      if (spec.name == "coloring") {
        rec = run_coloring_solver(*inst.graph, spec, oracle).record;
      } else {
        rec = run_is_solver(*inst.graph, spec, oracle, inst.known_is_oracle).record;
      }
    }
  } catch (const std::exception& e) {
    rec = BenchRecord{};
    rec.solver = solver;
    rec.error = e.what();
  }
  rec.instance = job.instance_id;
  rec.generator = generator;
  return rec;
}

}  // namespace

std::vector<SuiteJob> parse_suite(std::istream& in) {
  std::vector<SuiteJob> jobs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      json entry;
      try {
        entry = json::parse(line);
      } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
      }
      if (!entry.is_object()) throw InputError("expected a JSON object");
      for (const auto& [key, value] : entry.items()) {
        if (key != "id" && key != "instance" && key != "solvers") throw InputError("unknown field '" + key + "'");
      }
      const std::string id = entry.contains("id") ? string_field(entry, "id") : "line" + std::to_string(line_no);
      const json& instance = field(entry, "instance");
      if (!instance.is_object()) throw InputError("'instance' must be an object");
      check_keys(instance, kInstanceKeys, "instance");
      const json& solvers = field(entry, "solvers");
      if (!solvers.is_array() || solvers.empty()) throw InputError("'solvers' must be a non-empty list");
      std::vector<json> solver_points;
      for (const json& s : solvers) {
        if (!s.is_object()) throw InputError("each solver must be an object");
        check_keys(s, kSolverKeys, "solver");
        for (json& point : expand_grid(s)) solver_points.push_back(std::move(point));
      }
      const std::vector<json> instances = expand_grid(instance);
      for (std::size_t i = 0; i < instances.size(); ++i) {
        const std::string instance_id = instances.size() == 1 ? id : id + "#" + std::to_string(i);
        for (const json& s : solver_points) jobs.push_back({instance_id, instances[i], s});
      }
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return jobs;
}

std::vector<BenchRecord> run_suite(const std::vector<SuiteJob>& jobs, const OracleOptions& oracle) {
  std::vector<BenchRecord> records(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { records[i] = run_job(jobs[i], oracle); });
  return records;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

const std::vector<std::string> kColumns = {
    "instance", "generator", "n",     "solver", "r",          "p",          "d",
    "leaf",     "trials",    "seed",  "result", "oracle",     "ratio",      "nodes",
    "node_bound", "over_bound", "elapsed_us", "error"};

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <typename T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_same_v<T, double>) {
    return format_number(*v);
  } else if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else {
    return std::to_string(*v);
  }
}

std::vector<std::string> row_fields(const BenchRecord& r) {
  return {r.instance,          r.generator,          std::to_string(r.n), r.solver,
          opt_text(r.r),       opt_text(r.p),        opt_text(r.d),       r.leaf,
          opt_text(r.trials),  opt_text(r.seed),     opt_text(r.result),  opt_text(r.oracle),
          opt_text(r.ratio),   opt_text(r.nodes),    opt_text(r.node_bound),
          opt_text(r.over_bound), std::to_string(r.elapsed_us), r.error};
}

// Splits one CSV record, which may span lines inside quotes. False at EOF.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields, int& line_no) {
  fields.clear();
  std::string line;
  if (!std::getline(in, line)) return false;
  ++line_no;
  std::string current;
  bool quoted = false;
  std::size_t i = 0;
  while (true) {
    if (i == line.size()) {
      if (!quoted) break;
      if (!std::getline(in, line)) throw ParseError(line_no, "unterminated quoted field");
      ++line_no;
      current += '\n';
      i = 0;
      continue;
    }
    const char c = line[i++];
    if (quoted) {
      if (c == '"') {
        if (i < line.size() && line[i] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (c != '\r' || i != line.size()) {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return true;
}

template <typename T>
std::optional<T> parse_opt(const std::string& text, int line_no) {
  if (text.empty()) return std::nullopt;
  if constexpr (std::is_same_v<T, bool>) {
    if (text == "true") return true;
    if (text == "false") return false;
  } else {
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec == std::errc{} && res.ptr == text.data() + text.size()) return value;
  }
  throw ParseError(line_no, "bad value '" + text + "'");
}

template <typename T>
T parse_req(const std::string& text, int line_no) {
  const auto v = parse_opt<T>(text, line_no);
  if (!v) throw ParseError(line_no, "missing value");
  return *v;
}

}  // namespace

std::string bench_csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    if (i) out += ',';
    out += kColumns[i];
  }
  return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << bench_csv_header() << '\n';
  for (const auto& rec : records) {
    const auto fields = row_fields(rec);
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << ',';
      out << quote(fields[i]);
    }
    out << '\n';
  }
}

std::vector<BenchRecord> read_bench_csv(std::istream& in) {
  std::vector<std::string> f;
  int line_no = 0;
  if (!read_csv_record(in, f, line_no) || f != kColumns) throw ParseError(1, "unexpected CSV header");
  std::vector<BenchRecord> out;
  while (read_csv_record(in, f, line_no)) {
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != kColumns.size()) throw ParseError(line_no, "wrong number of fields");
    BenchRecord r;
    r.instance = f[0];
    r.generator = f[1];
    r.n = parse_req<int>(f[2], line_no);
    r.solver = f[3];
    r.r = parse_opt<double>(f[4], line_no);
    r.p = parse_opt<double>(f[5], line_no);
    r.d = parse_opt<int>(f[6], line_no);
    r.leaf = f[7];
    r.trials = parse_opt<int>(f[8], line_no);
    r.seed = parse_opt<std::uint64_t>(f[9], line_no);
    r.result = parse_opt<int>(f[10], line_no);
    r.oracle = parse_opt<int>(f[11], line_no);
    r.ratio = parse_opt<double>(f[12], line_no);
    r.nodes = parse_opt<std::uint64_t>(f[13], line_no);
    r.node_bound = parse_opt<double>(f[14], line_no);
    r.over_bound = parse_opt<bool>(f[15], line_no);
    r.elapsed_us = parse_req<long long>(f[16], line_no);
    r.error = f[17];
    out.push_back(std::move(r));
  }
  return out;
}

json to_json(const BenchRecord& r) {
  auto opt = [](const auto& v) -> json { return v ? json(*v) : json(nullptr); };
  json j;
  j["instance"] = r.instance;
  j["generator"] = r.generator;
  j["n"] = r.n;
  j["solver"] = r.solver;
  j["r"] = opt(r.r);
  j["p"] = opt(r.p);
  j["d"] = opt(r.d);
  j["leaf"] = r.leaf;
  j["trials"] = opt(r.trials);
  j["seed"] = opt(r.seed);
  j["result"] = opt(r.result);
  j["oracle"] = opt(r.oracle);
  j["ratio"] = opt(r.ratio);
  j["nodes"] = opt(r.nodes);
  j["node_bound"] = opt(r.node_bound);
  j["over_bound"] = opt(r.over_bound);
  j["elapsed_us"] = r.elapsed_us;
  j["error"] = r.error;
  return j;
}

}  // namespace xta
