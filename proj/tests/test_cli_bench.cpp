#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "xta/bench.hpp"
#include "xta/cli.hpp"
#include "xta/errors.hpp"
#include "xta/fglss.hpp"
#include "xta/io.hpp"
#include "xta/random.hpp"

using namespace xta;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("xta_cli_test_" + std::to_string(mix64(reinterpret_cast<std::uintptr_t>(this)) % 100000) +
            "_" + std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& text) const {
    const auto p = path / name;
    write_text_file(p, text);
    return p.string();
  }
  std::string at(const std::string& name) const { return (path / name).string(); }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<BenchRecord> bench_rows(const std::string& csv) {
  std::istringstream in(csv);
  return read_bench_csv(in);
}

// Drops the elapsed_us column.
std::string without_elapsed(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    const auto end = line.rfind(',');
    const auto start = line.rfind(',', end - 1);
    out << line.substr(0, start) << line.substr(end) << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("solve-is on an edgeless graph") {
  TempDir dir;
  const auto input = dir.file("empty4.col", "p edge 4 0\n");
  const CliRun r = run({"solve-is", "--input", input, "--p", "2", "--d", "4", "--leaf", "exact"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["result"] == 4);
  CHECK(j["set"] == json::array({1, 2, 3, 4}));
  CHECK(j["oracle"] == 4);
  CHECK(j["ratio"] == 1.0);
  CHECK(j["solver"] == "branch_is");
}

TEST_CASE("solve-is with r boosts and reports the baseline") {
  TempDir dir;
  const auto input = dir.at("g.col");
  REQUIRE(run({"gen", "gnp", "--n", "20", "--p", "0.3", "--seed", "4", "--out", input}).code == 0);
  const CliRun r = run({"solve-is", "--input", input, "--r", "4", "--seed", "1", "--baseline", "partition"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["solver"] == "boosted_is");
  CHECK(j["trials"] == 12);
  CHECK(j["p"] == 4.0);
  CHECK(j["d"] == 8);
  CHECK(j["baseline"]["solver"] == "partition_is");
  CHECK(j["baseline"]["node_bound"] == 4.0 * 32.0);
  CHECK(j["ratio"].get<double>() >= 1.0);

  const Graph g = parse_dimacs_col(read_text_file(input));
  VertexSet set(g.n());
  for (int v : j["set"]) set.set(v - 1);
  CHECK(g.is_independent(set));
  CHECK(set.count() == j["result"]);

  const CliRun csv = run({"solve-is", "--input", input, "--r", "4", "--seed", "1", "--baseline", "partition",
                          "--format", "csv"});
  REQUIRE(csv.code == 0);
  const auto rows = bench_rows(csv.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].result == j["result"].get<int>());
}

TEST_CASE("solve-coloring and solve-vc") {
  TempDir dir;
  const auto graph = dir.at("g.col");
  REQUIRE(run({"gen", "gnp", "--n", "12", "--p", "0.4", "--seed", "2", "--out", graph}).code == 0);
  const CliRun c = run({"solve-coloring", "--input", graph, "--seed", "3"});
  REQUIRE(c.code == 0);
  const json cj = json::parse(c.out);
  CHECK(cj["classes"].size() == cj["result"].get<std::size_t>());
  CHECK(cj["ratio"].get<double>() >= 1.0);
  CHECK(cj["ratio"].get<double>() <= 6.0);
  CHECK(run({"solve-coloring", "--input", graph, "--r", "3"}).code == 3);

  const auto hyper = dir.at("h.hedge");
  REQUIRE(run({"gen", "hyper", "--n", "12", "--m", "25", "--k", "3", "--seed", "5", "--out", hyper}).code == 0);
  const CliRun v = run({"solve-vc", "--input", hyper, "--d", "3", "--leaf", "exact"});
  REQUIRE(v.code == 0);
  const json vj = json::parse(v.out);
  CHECK(vj["ratio"] == 1.0);
  const Hypergraph h = parse_hypergraph(read_text_file(hyper));
  VertexSet cover(h.n());
  for (int x : vj["cover"]) cover.set(x - 1);
  CHECK(h.is_cover(cover));

  const CliRun on_graph = run({"solve-vc", "--input", graph, "--leaf", "matching"});
  REQUIRE(on_graph.code == 0);
  CHECK(json::parse(on_graph.out)["ratio"].get<double>() <= 2.0);
}

TEST_CASE("reduce-fglss writes the conflict graph") {
  TempDir dir;
  const auto input = dir.file("t.csp", "p csp 2 2\ns 1 2\na 1 0\na 0 1\na 1 1\ns 1\na 0\n");
  const auto out = dir.at("t.col");
  const auto labels = dir.at("t.lab");
  const CliRun r = run({"reduce-fglss", "--input", input, "--out", out, "--labels", labels});
  REQUIRE(r.code == 0);
  const Graph g = parse_dimacs_col(read_text_file(out));
  CHECK(g.n() == 4);
  CHECK(g.edges() == fglss_reduce(parse_csp(read_text_file(input))).graph.edges());
  CHECK(read_text_file(labels) == "1 1 10\n2 1 01\n3 1 11\n4 2 0\n");
  CHECK(json::parse(r.out)["vertices"] == 4);
}

TEST_CASE("gen is reproducible") {
  for (const char* kind : {"gnp", "planted", "hyper", "csp"}) {
    const CliRun a = run({"gen", kind, "--n", "9", "--seed", "11"});
    const CliRun b = run({"gen", kind, "--n", "9", "--seed", "11"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run({"gen", kind, "--n", "9", "--seed", "12"}).out);
  }
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(run({"solve-is", "--input", dir.at("missing.col")}).code == 2);
  CHECK(run({"solve-is", "--input", dir.file("e.col", "p edge 2 0\n"), "--bogus"}).code == 2);
  CHECK(run({"solve-is", "--input", dir.file("bad.col", "p edge 2 1\ne 1 1\n")}).code == 2);
  CHECK(run({"solve-is", "--input", dir.at("e.col"), "--leaf", "sdp"}).code == 2);
  CHECK(run({"solve-is", "--input", dir.at("e.col"), "--p", "0.5"}).code == 3);
  CHECK(run({"gen", "gnp", "--p", "1.5"}).code == 3);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const CliRun bad_suite = run({"bench", "--suite", dir.file("s.jsonl", "\n{\"instance\": 3}\n")});
  CHECK(bad_suite.code == 2);
  CHECK(bad_suite.err.find("line 2") != std::string::npos);
}

TEST_CASE("bench output shape") {
  TempDir dir;
  const CliRun empty = run({"bench", "--suite", dir.file("empty.jsonl", "")});
  REQUIRE(empty.code == 0);
  CHECK(empty.out == bench_csv_header() + "\n");

  const auto suite = dir.file(
      "one.jsonl",
      R"({"id": "g", "instance": {"gen": "gnp", "n": 14, "p": 0.3, "seed": 2}, "solvers": [{"solver": "branch_is", "p": 2, "d": 4, "seed": 1}]})"
      "\n");
  const CliRun one = run({"bench", "--suite", suite});
  REQUIRE(one.code == 0);
  const auto rows = bench_rows(one.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].instance == "g");
  CHECK(rows[0].generator == "gnp(n=14;p=0.3;seed=2)");
  CHECK(rows[0].oracle.has_value());
  CHECK(rows[0].error.empty());

  const auto out_file = dir.at("out.csv");
  REQUIRE(run({"bench", "--suite", suite, "--out", out_file}).code == 0);
  CHECK(bench_rows(read_text_file(out_file)).size() == 1);
}

TEST_CASE("suite grids expand in order") {
  std::istringstream in(
      "# comment\n"
      R"({"id": "x", "instance": {"gen": "gnp", "n": [8, 10], "p": 0.5, "seed": [1, 2]}, "solvers": [{"solver": "greedy_is"}, {"solver": "branch_is", "d": [4, 5]}]})"
      "\n");
  const auto jobs = parse_suite(in);
  REQUIRE(jobs.size() == 12);
  CHECK(jobs[0].instance_id == "x#0");
  CHECK(jobs[0].instance["n"] == 8);
  CHECK(jobs[0].solver["solver"] == "greedy_is");
  CHECK(jobs[1].solver["d"] == 4);
  CHECK(jobs[2].solver["d"] == 5);
  CHECK(jobs[11].instance_id == "x#3");
  CHECK(jobs[11].instance["n"] == 10);
  CHECK(jobs[11].instance["seed"] == 2);

  auto parse = [](const std::string& text) {
    std::istringstream s(text);
    return parse_suite(s);
  };
  CHECK_THROWS_AS(parse("{\"instance\": {\"gen\": \"gnp\"}, \"solvers\": []}"), ParseError);
  CHECK_THROWS_AS(parse("{\"instance\": {\"gen\": \"gnp\", \"q\": 1}, \"solvers\": [{\"solver\": \"x\"}]}"),
                  ParseError);
  CHECK_THROWS_AS(parse("{\"instance\": {\"gen\": \"gnp\", \"n\": []}, \"solvers\": [{\"solver\": \"x\"}]}"),
                  ParseError);
  CHECK_THROWS_AS(parse("not json"), ParseError);
}

TEST_CASE("run_suite records failures and keeps going") {
  std::istringstream in(
      R"({"id": "h", "instance": {"gen": "hyper", "n": 8, "m": 10, "k": 3, "seed": 1}, "solvers": [{"solver": "greedy_is"}, {"solver": "vc", "d": 3}, {"solver": "mystery"}]})"
      "\n"
      R"({"id": "bad", "instance": {"gen": "gnp", "n": 8, "p": 2.0}, "solvers": [{"solver": "exact_is"}]})"
      "\n");
  const auto rows = run_suite(parse_suite(in), OracleOptions{});
  REQUIRE(rows.size() == 4);
  CHECK_FALSE(rows[0].error.empty());
  CHECK(rows[1].error.empty());
  CHECK(rows[1].ratio == 1.0);
  CHECK_FALSE(rows[2].error.empty());
  CHECK(rows[3].instance == "bad");
  CHECK_FALSE(rows[3].error.empty());
}

TEST_CASE("oracle caps") {
  auto suite = [](const std::string& solver) {
    return R"({"instance": {"gen": "gnp", "n": 30, "p": 0.3, "seed": 5}, "solvers": [{"solver": ")" + solver +
           R"("}]})" + "\n";
  };
  for (const std::string solver : {"greedy_is", "coloring", "vc"}) {
    std::istringstream a(suite(solver)), b(suite(solver));
    const auto capped = run_suite(parse_suite(a), OracleOptions{});
    OracleOptions force;
    force.force = true;
    force.chromatic_cap = 20;
    const auto forced = solver == "coloring" ? std::vector<BenchRecord>{} : run_suite(parse_suite(b), force);
    REQUIRE(capped.size() == 1);
    CHECK(capped[0].error.empty());
    CHECK_FALSE(capped[0].oracle.has_value());
    CHECK_FALSE(capped[0].ratio.has_value());
    if (!forced.empty()) {
      CHECK(forced[0].oracle.has_value());
      CHECK(*forced[0].ratio >= 1.0);
    }
  }
}

TEST_CASE("planted suite stays within the target ratio") {
  std::istringstream in(
      R"({"id": "planted", "instance": {"gen": "planted", "n": 24, "s": 8, "p": 0.5, "seed": [1, 2, 3, 4, 5]}, "solvers": [{"solver": "boosted_is", "r": 4, "seed": 9}]})"
      "\n");
  const auto rows = run_suite(parse_suite(in), OracleOptions{});
  REQUIRE(rows.size() == 5);
  for (const auto& row : rows) {
    REQUIRE(row.error.empty());
    REQUIRE(row.ratio.has_value());
    CHECK(*row.oracle >= 8);
    CHECK(*row.ratio >= 1.0);
    CHECK(*row.ratio <= 4.0);
  }
}

TEST_CASE("bench is deterministic apart from elapsed") {
  TempDir dir;
  const auto suite = dir.file(
      "s.jsonl",
      R"({"id": "g", "instance": {"gen": "gnp", "n": 22, "p": 0.3, "seed": [1, 2]}, "solvers": [{"solver": "boosted_is", "r": 3, "seed": 4}, {"solver": "partition_is", "r": 3}, {"solver": "coloring", "r": 6, "seed": 2}]})"
      "\n"
      R"({"id": "c", "instance": {"gen": "csp", "vars": 6, "m": 8, "arity": 2, "acc": 2, "seed": 3}, "solvers": [{"solver": "branch_is", "p": 2, "seed": 4}]})"
      "\n"
      R"({"id": "h", "instance": {"gen": "hyper", "n": 12, "m": 20, "k": 3, "seed": 3}, "solvers": [{"solver": "vc", "d": 3, "leaf": ["exact", "matching"]}]})"
      "\n");
  const CliRun a = run({"bench", "--suite", suite});
  const CliRun b = run({"bench", "--suite", suite});
  REQUIRE(a.code == 0);
  CHECK(without_elapsed(a.out) == without_elapsed(b.out));
  const auto rows_a = bench_rows(a.out);
  const auto rows_b = bench_rows(b.out);
  REQUIRE(rows_a.size() == 9);
  for (std::size_t i = 0; i < rows_a.size(); ++i) {
    CHECK(rows_a[i].same_outcome(rows_b[i]));
    CHECK(rows_a[i].error.empty());
    if (rows_a[i].ratio) CHECK(*rows_a[i].ratio >= 1.0);
  }
}

TEST_CASE("CSV round trip") {
  BenchRecord full;
  full.instance = "a,b";
  full.generator = "gen(\"quoted\")\nsecond line";
  full.n = 7;
  full.solver = "boosted_is";
  full.r = 0.1 + 0.2;
  full.p = 4;
  full.d = 8;
  full.leaf = "exact";
  full.trials = 12;
  full.seed = 18446744073709551615ULL;
  full.result = 3;
  full.oracle = 4;
  full.ratio = 4.0 / 3.0;
  full.nodes = 99;
  full.node_bound = 663.9;
  full.over_bound = false;
  full.elapsed_us = 1234;
  BenchRecord sparse;
  sparse.instance = "x";
  sparse.error = "bad, \"really\"";

  std::ostringstream out;
  write_bench_csv(out, {full, sparse});
  const auto back = bench_rows(out.str());
  REQUIRE(back.size() == 2);
  CHECK(back[0].same_outcome(full));
  CHECK(back[0].elapsed_us == 1234);
  CHECK(back[1].same_outcome(sparse));
  CHECK_FALSE(back[1].ratio.has_value());

  std::istringstream bad_header("instance,n\n");
  CHECK_THROWS_AS(read_bench_csv(bad_header), ParseError);
  std::istringstream bad_value(bench_csv_header() + "\nx,g,seven,s,,,,,,,,,,,,,0,\n");
  CHECK_THROWS_AS(read_bench_csv(bad_value), ParseError);
}
