#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "xta/errors.hpp"
#include "xta/fglss.hpp"
#include "xta/leaf_solvers.hpp"
#include "xta/random.hpp"

using namespace xta;

namespace {

// x1 OR x2, NOT x1 (0-based variables 0 and 1).
Csp or_and_not() {
  Csp csp;
  csp.n_vars = 2;
  csp.predicates.push_back({{0, 1}, {0b01, 0b10, 0b11}});
  csp.predicates.push_back({{0}, {0b0}});
  return csp;
}

}  // namespace

TEST_CASE("freeness") {
  CHECK(freeness(or_and_not()) == 3);
  Csp neg;
  neg.n_vars = 1;
  neg.predicates.push_back({{0}, {0}});
  CHECK(freeness(neg) == 1);
  CHECK(freeness(Csp{}) == 0);
}

TEST_CASE("csp_val_bruteforce") {
  Csp contradiction;
  contradiction.n_vars = 1;
  contradiction.predicates.push_back({{0}, {1}});
  contradiction.predicates.push_back({{0}, {0}});
  CHECK(csp_val_bruteforce(contradiction) == 1);
  CHECK(csp_val_bruteforce(or_and_not()) == 2);
  CHECK(csp_val_bruteforce(Csp{}) == 0);
  Csp wide;
  wide.n_vars = kMaxBruteforceCspVars + 1;
  CHECK_THROWS_AS(csp_val_bruteforce(wide), ContractViolation);
}

TEST_CASE("fglss_reduce examples") {
  const Csp csp = or_and_not();
  const FglssGraph g = fglss_reduce(csp);
  CHECK(g.graph.n() == 4);
  CHECK(oracle::alpha(g.graph) == 2);
  CHECK(exact_mis(g.graph).count() == csp_val_bruteforce(csp));
  // Same-predicate vertices 0..2 form a triangle; vertex 3 (x1 = 0) conflicts
  // with the assignments setting x1 = 1.
  CHECK(g.graph.has_edge(0, 1));
  CHECK(g.graph.has_edge(0, 2));
  CHECK(g.graph.has_edge(1, 2));
  CHECK(g.graph.has_edge(0, 3));
  CHECK_FALSE(g.graph.has_edge(1, 3));
  CHECK(g.graph.has_edge(2, 3));

  Csp single;
  single.n_vars = 2;
  single.predicates.push_back({{0, 1}, {0b10}});
  const FglssGraph one = fglss_reduce(single);
  CHECK(one.graph.n() == 1);
  CHECK(one.graph.edge_count() == 0);
  CHECK(exact_mis(one.graph).count() == 1);

  Csp disjoint;
  disjoint.n_vars = 2;
  disjoint.predicates.push_back({{0}, {1}});
  disjoint.predicates.push_back({{1}, {0}});
  const FglssGraph two = fglss_reduce(disjoint);
  CHECK(two.graph.n() == 2);
  CHECK(two.graph.edge_count() == 0);
  CHECK(exact_mis(two.graph).count() == 2);
}

TEST_CASE("fglss_reduce properties on random CSPs") {
  SplitMix64 rng(101);
  for (int i = 0; i < 80; ++i) {
    const int n_vars = 2 + static_cast<int>(uniform_below(rng, 7));
    const int arity = 1 + static_cast<int>(uniform_below(rng, std::min<std::uint64_t>(3, n_vars)));
    const int m = 1 + static_cast<int>(uniform_below(rng, 10));
    const int acc = 1 + static_cast<int>(uniform_below(rng, std::min<std::uint64_t>(4, 1U << arity)));
    const Csp csp = gen_random_csp(n_vars, m, arity, acc, rng());
    const FglssGraph red = fglss_reduce(csp);
    CHECK(red.graph.n() <= csp.m() * freeness(csp));
    const VertexSet best = exact_mis(red.graph);
    CHECK(best.count() == csp_val_bruteforce(csp));
    // Same-predicate cliques.
    for (int u = 0; u < red.graph.n(); ++u) {
      for (int v = u + 1; v < red.graph.n(); ++v) {
        if (red.labels[static_cast<std::size_t>(u)].predicate ==
            red.labels[static_cast<std::size_t>(v)].predicate) {
          CHECK(red.graph.has_edge(u, v));
        }
      }
    }
    // Labels of an independent set form a consistent partial assignment that
    // satisfies every predicate it names.
    const auto values = labels_to_assignment(csp, red, best);
    std::uint64_t full = 0;
    for (int x = 0; x < csp.n_vars; ++x) {
      if (values[static_cast<std::size_t>(x)] == 1) full |= std::uint64_t{1} << x;
    }
    CHECK(csp.satisfied_count(full) >= best.count());
  }
}

TEST_CASE("labels_to_assignment rejects conflicting labels") {
  const Csp csp = or_and_not();
  const FglssGraph g = fglss_reduce(csp);
  CHECK_THROWS_AS(labels_to_assignment(csp, g, VertexSet(4, {0, 3})), ContractViolation);
}

TEST_CASE("gen_random_csp") {
  const Csp tautologies = gen_random_csp(5, 6, 2, 4, 1);
  CHECK(csp_val_bruteforce(tautologies) == 6);
  CHECK_THROWS_AS(gen_random_csp(4, 6, 2, 0, 3), ContractViolation);
  CHECK_THROWS_AS(gen_random_csp(4, 6, 5, 1, 3), ContractViolation);
  CHECK_THROWS_AS(gen_random_csp(4, 6, 2, 5, 3), ContractViolation);
  const Csp a = gen_random_csp(4, 6, 2, 2, 3);
  const Csp b = gen_random_csp(4, 6, 2, 2, 3);
  REQUIRE(a.m() == b.m());
  for (int i = 0; i < a.m(); ++i) {
    CHECK(a.predicates[static_cast<std::size_t>(i)].scope == b.predicates[static_cast<std::size_t>(i)].scope);
    CHECK(a.predicates[static_cast<std::size_t>(i)].accepting ==
          b.predicates[static_cast<std::size_t>(i)].accepting);
  }
  a.validate();
}

TEST_CASE("CSP text format") {
  const Csp csp = parse_csp("c example\np csp 2 2\ns 1 2\na 1 0\na 0 1\na 1 1\ns 1\na 0\n");
  REQUIRE(csp.m() == 2);
  CHECK(csp.predicates[0].scope == std::vector<int>{0, 1});
  CHECK(csp.predicates[0].accepting == std::vector<LocalAssignment>{0b01, 0b10, 0b11});
  CHECK(csp_val_bruteforce(csp) == 2);

  std::ostringstream out;
  write_csp(out, csp);
  const Csp back = parse_csp(out.str());
  CHECK(back.predicates[0].accepting == csp.predicates[0].accepting);
  CHECK(back.predicates[1].scope == csp.predicates[1].scope);

  CHECK_THROWS_AS(parse_csp("p csp 2 1\ns 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_csp("p csp 2 1\ns 1 2\na 1\n"), ParseError);
  CHECK_THROWS_AS(parse_csp("p csp 2 1\ns 1 2\na 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_csp("p csp 2 1\ns 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_csp("p csp 2 2\ns 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_csp("p csp 2 1\na 1\n"), ParseError);
  CHECK_THROWS_AS(parse_csp("p csp 2 1\ns 1\na 1\na 1\n"), ParseError);

  std::ostringstream labels;
  write_fglss_labels(labels, csp, fglss_reduce(csp));
  CHECK(labels.str() == "1 1 10\n2 1 01\n3 1 11\n4 2 0\n");
}
