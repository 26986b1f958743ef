#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "xta/errors.hpp"
#include "xta/generators.hpp"
#include "xta/leaf_solvers.hpp"
#include "xta/random.hpp"

using namespace xta;

TEST_CASE("greedy_is") {
  CHECK(greedy_is(Graph(4)).count() == 4);
  CHECK(greedy_is(cycle_graph(5)).count() == 2);
  const Graph k6 = complete_graph(6);
  CHECK(greedy_is(k6).count() == 1);
  CHECK(greedy_is(k6).count() >= 6 / (k6.max_degree() + 1));
}

TEST_CASE("greedy_is is independent and meets n/(maxdeg+1)") {
  SplitMix64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 60));
    const Graph g = gen_gnp(n, unit_interval(rng()), rng());
    const VertexSet s = greedy_is(g);
    REQUIRE(g.is_independent(s));
    const int bound = (n + g.max_degree()) / (g.max_degree() + 1);  // ceil(n/(D+1))
    CHECK(s.count() >= bound);
  }
}

TEST_CASE("exact_mis named graphs") {
  const Graph petersen = petersen_graph();
  const int alpha = oracle::alpha(petersen);
  REQUIRE(alpha == 4);
  CHECK(exact_mis(petersen).count() == alpha);
  CHECK(petersen.is_independent(exact_mis(petersen)));
  CHECK(exact_mis(complete_graph(5)).count() == 1);
  CHECK(exact_mis(cycle_graph(5)).count() == 2);
  CHECK(exact_mis(Graph(0)).count() == 0);
}

TEST_CASE("exact_mis respects the alive mask") {
  Graph g = cycle_graph(6);
  g.remove_vertex(0);  // path 1-2-3-4-5
  const VertexSet s = exact_mis(g);
  CHECK(s.count() == 3);
  CHECK(s.is_subset_of(g.alive()));
}

TEST_CASE("exact_mis matches subset enumeration on random graphs") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 150; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 16));
    Graph g = gen_gnp(n, unit_interval(rng()), rng());
    if (i % 3 == 0) g.remove_vertex(0);
    const VertexSet s = exact_mis(g);
    REQUIRE(g.is_independent(s));
    REQUIRE(s.is_subset_of(g.alive()));
    CHECK(s.count() == oracle::alpha(g));
  }
}

TEST_CASE("enumerate_is_of_size") {
  const auto c5 = enumerate_is_of_size(cycle_graph(5), 2);
  REQUIRE(c5.has_value());
  CHECK(*c5 == VertexSet(5, {0, 2}));
  CHECK_FALSE(enumerate_is_of_size(complete_graph(4), 2).has_value());
  const auto zero = enumerate_is_of_size(petersen_graph(), 0);
  REQUIRE(zero.has_value());
  CHECK(zero->empty());
  CHECK_THROWS_AS(enumerate_is_of_size(Graph(3), -1), ContractViolation);

  SplitMix64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 14));
    const Graph g = gen_gnp(n, unit_interval(rng()), rng());
    const int alpha = exact_mis(g).count();
    for (int s = 0; s <= alpha + 1; ++s) {
      const auto found = enumerate_is_of_size(g, s);
      CHECK(found.has_value() == (s <= alpha));
      if (found) {
        CHECK(found->count() == s);
        CHECK(g.is_independent(*found));
      }
    }
  }
}

TEST_CASE("exact_vc and matching_vc") {
  const Hypergraph p3 = Hypergraph::from_graph(path_graph(3));
  CHECK(exact_vc(p3) == VertexSet(3, {1}));
  CHECK(matching_vc(p3) == VertexSet(3, {0, 1}));

  Hypergraph triple(3, 3);
  triple.add_edge({0, 1, 2});
  CHECK(exact_vc(triple).count() == 1);
  CHECK(matching_vc(triple).count() == 3);

  const Hypergraph petersen = Hypergraph::from_graph(petersen_graph());
  REQUIRE(oracle::min_cover(petersen) == 6);
  CHECK(exact_vc(petersen).count() == 6);
  CHECK(exact_vc(petersen).count() == 10 - exact_mis(petersen_graph()).count());

  const Hypergraph matching = Hypergraph::from_graph(perfect_matching_graph(4));
  CHECK(matching_vc(matching).count() == 8);
  CHECK(matching_vc(matching).count() == 2 * exact_vc(matching).count());

  CHECK(exact_vc(Hypergraph(4, 2)).count() == 0);
}

TEST_CASE("vertex covers against exhaustive search") {
  SplitMix64 rng(99);
  for (int i = 0; i < 150; ++i) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 18));
    const int k = 2 + static_cast<int>(uniform_below(rng, 2));
    const int m = static_cast<int>(uniform_below(rng, 3 * static_cast<std::uint64_t>(n)));
    const Hypergraph h = gen_random_hypergraph(n, m, k, rng());
    const VertexSet exact = exact_vc(h);
    const VertexSet approx = matching_vc(h);
    REQUIRE(h.is_cover(exact));
    REQUIRE(h.is_cover(approx));
    const int opt = oracle::min_cover(h);
    CHECK(exact.count() == opt);
    CHECK(approx.count() <= k * opt);
  }
}

TEST_CASE("leaf solver registry") {
  for (const auto& name : leaf_solver_names()) {
    const auto leaf = make_leaf_solver(name);
    CHECK(leaf->name() == name);
    const Graph g = petersen_graph();
    CHECK(g.is_independent(leaf->solve(g)));
  }
  CHECK(make_leaf_solver("exact")->advertised_ratio(7) == 1.0);
  CHECK(make_leaf_solver("enum")->advertised_ratio(7) == 1.0);
  CHECK(make_leaf_solver("greedy")->advertised_ratio(7) == 8.0);
  CHECK(make_leaf_solver("enum")->solve(petersen_graph()).count() == 4);
  CHECK_THROWS_AS(make_leaf_solver("sdp"), InputError);
}
