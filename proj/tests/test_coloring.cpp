#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "xta/coloring.hpp"
#include "xta/errors.hpp"
#include "xta/generators.hpp"
#include "xta/random.hpp"

using namespace xta;

namespace {

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Coloring singletons(int n) {
  Coloring c;
  for (int v = 0; v < n; ++v) c.classes.emplace_back(n, std::initializer_list<int>{v});
  return c;
}

}  // namespace

TEST_CASE("verify_coloring") {
  const Graph k3 = complete_graph(3);
  CHECK(verify_coloring(k3, singletons(3)));
  CHECK_FALSE(verify_coloring(k3, Coloring{{VertexSet::full(3)}}));
  CHECK_FALSE(verify_coloring(k3, Coloring{{VertexSet(3, {0}), VertexSet(3, {1})}}));
  CHECK_FALSE(verify_coloring(Graph(3), Coloring{{VertexSet(3, {0, 1}), VertexSet(3, {1, 2})}}));
  CHECK_FALSE(verify_coloring(Graph(2), Coloring{{VertexSet(2, {0, 1}), VertexSet(2)}}));
}

TEST_CASE("optcol on named graphs") {
  const Coloring k4 = optcol(complete_graph(4));
  CHECK(k4.size() == 4);
  CHECK(verify_coloring(complete_graph(4), k4));

  for (auto [a, b] : {std::pair{1, 1}, {2, 3}, {4, 4}}) {
    const Graph g = complete_bipartite(a, b);
    CHECK(optcol(g).size() == 2);
  }
  CHECK(optcol(path_graph(7)).size() == 2);

  const Graph petersen = petersen_graph();
  REQUIRE_FALSE(oracle::k_colorable(petersen, 2));
  REQUIRE(oracle::k_colorable(petersen, 3));
  const Coloring pc = optcol(petersen);
  CHECK(pc.size() == 3);
  CHECK(verify_coloring(petersen, pc));

  CHECK(optcol(Graph(0)).size() == 0);
  CHECK(optcol(Graph(5)).size() == 1);
  CHECK_THROWS_AS(optcol(Graph(kMaxOptcolVertices + 1)), ContractViolation);
}

TEST_CASE("chromatic_bruteforce") {
  CHECK(chromatic_bruteforce(cycle_graph(5)) == 3);
  CHECK(chromatic_bruteforce(Graph(6)) == 1);
  CHECK(chromatic_bruteforce(complete_graph(7)) == 7);
  CHECK(chromatic_bruteforce(Graph(0)) == 0);
  CHECK_THROWS_AS(chromatic_bruteforce(Graph(kMaxBruteforceColoringVertices + 1)), ContractViolation);
}

TEST_CASE("optcol agrees with both brute-force routes on small random graphs") {
  SplitMix64 rng(31);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 9));
    Graph g = gen_gnp(n, unit_interval(rng()), rng());
    if (n > 2 && i % 4 == 0) g.remove_vertex(1);
    const Coloring c = optcol(g);
    REQUIRE(verify_coloring(g, c));
    const int chi = oracle::chromatic(g);
    CHECK(c.size() == chi);
    CHECK(chromatic_bruteforce(g) == chi);
    CHECK(chromatic_number(g) == chi);
  }
}

TEST_CASE("optcol handles its full size range") {
  const Graph g = gen_gnp(kMaxOptcolVertices, 0.5, 12);
  const Coloring c = optcol(g);
  CHECK(verify_coloring(g, c));
  CHECK(c.size() == chromatic_number(g));
}

TEST_CASE("admissible coloring ratios") {
  const double r0 = min_coloring_ratio();
  CHECK(r0 == doctest::Approx(1.5596104694623696).epsilon(1e-12));
  CHECK_FALSE(coloring_ratio_admissible(1.5));
  CHECK(coloring_ratio_admissible(r0 + 1e-9));
  CHECK(coloring_ratio_admissible(4.0));
  CHECK_THROWS_AS(chr_approx(Graph(3), 1.2, 0), ContractViolation);
  CHECK_THROWS_AS(chr_approx_wrapped(Graph(3), 3.5, 0), ContractViolation);

  const PeelingPlan plan = peeling_plan(16, 4.0, 1);
  CHECK(plan.threshold == doctest::Approx(2.0));
  CHECK(plan.inner.p == doctest::Approx(4.0 / std::log(8.0)));
  CHECK(plan.inner.d == 4);
  CHECK(plan.inner.leaf == "exact");
}

TEST_CASE("chr_approx examples") {
  const auto edgeless = chr_approx(Graph(12), 8.0, 3);
  CHECK(edgeless.coloring.size() == 1);
  CHECK(edgeless.peeled == 1);

  for (int n : {3, 6, 9}) {
    const Graph kn = complete_graph(n);
    const auto res = chr_approx(kn, 8.0, 5);
    CHECK(res.coloring.size() == n);
    CHECK(verify_coloring(kn, res.coloring));
  }

  CHECK(chr_approx_wrapped(Graph(10), 10.0, 1).coloring.size() == 1);
  CHECK(chr_approx_wrapped(complete_graph(5), 10.0, 1).coloring.size() == 5);
  CHECK(chr_approx(Graph(0), 4.0, 1).coloring.size() == 0);
}

TEST_CASE("chr_approx class count against chromatic_bruteforce") {
  int within = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gen_gnp(16, 0.4, seed);
    const auto res = chr_approx(g, 4.0, seed + 1000);
    REQUIRE(verify_coloring(g, res.coloring));
    if (res.coloring.size() <= 6 * chromatic_bruteforce(g)) ++within;
  }
  CHECK(within >= 90);
}

TEST_CASE("chr_approx is deterministic per seed") {
  const Graph g = gen_gnp(16, 0.4, 77);
  const auto a = chr_approx(g, 4.0, 9);
  const auto b = chr_approx(g, 4.0, 9);
  CHECK(a.coloring.classes == b.coloring.classes);
  CHECK(a.stats.same_work(b.stats));
}
