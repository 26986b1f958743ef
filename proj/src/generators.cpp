#include "xta/generators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "xta/errors.hpp"
#include "xta/random.hpp"

namespace xta {

namespace {

void require_probability(double p) {
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
}

}  // namespace

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0, "vertex count must be non-negative");
  require_probability(p);
  Graph g(n);
  SplitMix64 rng(seed);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit_interval(rng()) < p) g.add_edge(u, v);
    }
  }
  return g;
}

PlantedInstance gen_planted_is(int n, int s, double p, std::uint64_t seed) {
  require(n >= 0 && s >= 0, "sizes must be non-negative");
  require(s <= n, "planted set size exceeds vertex count");
  require_probability(p);
  Graph g(n);
  SplitMix64 rng(seed);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (v < s) continue;
      if (unit_interval(rng()) < p) g.add_edge(u, v);
    }
  }
  VertexSet planted(n);
  for (int v = 0; v < s; ++v) planted.set(v);
  return {std::move(g), std::move(planted)};
}

Hypergraph gen_random_hypergraph(int n, int m, int k, std::uint64_t seed) {
  require(n >= 1 && m >= 0 && k >= 1, "hypergraph generator needs n >= 1, m >= 0, k >= 1");
  require(k <= n, "edge size k exceeds vertex count");
  Hypergraph h(n, k);
  SplitMix64 rng(seed);
  const int min_size = std::min(2, k);
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int e = 0; e < m; ++e) {
    const int size =
        min_size + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k - min_size + 1)));
    std::iota(pool.begin(), pool.end(), 0);
    // partial Fisher-Yates
    for (int i = 0; i < size; ++i) {
      const auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    h.add_edge(std::vector<int>(pool.begin(), pool.begin() + size));
  }
  return h;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  if (n >= 3) {
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  } else if (n == 2) {
    g.add_edge(0, 1);
  }
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph perfect_matching_graph(int pairs) {
  Graph g(2 * pairs);
  for (int i = 0; i < pairs; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

}  // namespace xta
