#include "xta/graph.hpp"

#include <algorithm>
#include <string>

#include "xta/errors.hpp"

namespace xta {

Graph::Graph(int n) : n_(n), alive_(VertexSet::full(n)) {
  require(n >= 0, "vertex count must be non-negative");
  adjacency_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw ContractViolation("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") outside vertex range");
  }
  if (u == v) throw ContractViolation("self-loop at vertex " + std::to_string(u));
  adjacency_[static_cast<std::size_t>(u)].set(v);
  adjacency_[static_cast<std::size_t>(v)].set(u);
}

void Graph::set_alive(VertexSet mask) {
  require(mask.universe() == n_, "alive mask universe does not match the graph");
  alive_ = std::move(mask);
}

Graph Graph::induced_subgraph(const VertexSet& subset) const {
  require(subset.universe() == n_ && subset.is_subset_of(alive_),
          "induced subgraph requires a subset of the alive vertices");
  Graph g = *this;
  g.alive_ = subset;
  return g;
}

std::optional<VertexDegree> Graph::max_degree_vertex() const {
  std::optional<VertexDegree> best;
  alive_.for_each([&](int v) {
    const int d = degree(v);
    if (!best || d > best->degree) best = VertexDegree{v, d};
  });
  return best;
}

std::optional<VertexDegree> Graph::min_degree_vertex() const {
  std::optional<VertexDegree> best;
  alive_.for_each([&](int v) {
    const int d = degree(v);
    if (!best || d < best->degree) best = VertexDegree{v, d};
  });
  return best;
}

int Graph::max_degree() const {
  const auto top = max_degree_vertex();
  return top ? top->degree : 0;
}

bool Graph::is_independent(const VertexSet& set) const {
  if (set.universe() != n_) return false;
  bool ok = true;
  set.for_each([&](int v) {
    if (ok && adjacency(v).intersects(set)) ok = false;
  });
  return ok;
}

int Graph::edge_count() const {
  int twice = 0;
  alive_.for_each([&](int v) { twice += degree(v); });
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  alive_.for_each([&](int u) {
    neighbors(u).for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  });
  return out;
}

Hypergraph::Hypergraph(int n, int k) : n_(n), k_(k) {
  require(n >= 0, "vertex count must be non-negative");
  require(k >= 1, "maximum edge size k must be at least 1");
}

void Hypergraph::add_edge(std::vector<int> vertices) {
  require(!vertices.empty(), "hyperedges must be nonempty");
  if (static_cast<int>(vertices.size()) > k_) {
    throw ContractViolation("hyperedge of size " + std::to_string(vertices.size()) +
                            " exceeds k = " + std::to_string(k_));
  }
  std::sort(vertices.begin(), vertices.end());
  if (vertices.front() < 0 || vertices.back() >= n_) {
    throw ContractViolation("hyperedge vertex outside range 0.." + std::to_string(n_ - 1));
  }
  require(std::adjacent_find(vertices.begin(), vertices.end()) == vertices.end(),
          "hyperedge repeats a vertex");
  edges_.push_back(std::move(vertices));
}

int Hypergraph::degree(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const auto& e) {
    return std::binary_search(e.begin(), e.end(), v);
  }));
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) {
    for (int v : e) ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

int Hypergraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool Hypergraph::is_cover(const VertexSet& cover) const {
  if (cover.universe() != n_) return false;
  return std::all_of(edges_.begin(), edges_.end(), [&](const auto& e) {
    return std::any_of(e.begin(), e.end(), [&](int v) { return cover.test(v); });
  });
}

std::vector<VertexSet> Hypergraph::edge_sets() const {
  std::vector<VertexSet> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(n_, std::span<const int>(e));
  return out;
}

Hypergraph Hypergraph::from_graph(const Graph& graph) {
  Hypergraph h(graph.n(), 2);
  for (auto [u, v] : graph.edges()) h.add_edge({u, v});
  return h;
}

}  // namespace xta
