#include "xta/leaf_solvers.hpp"

#include <algorithm>

#include "xta/errors.hpp"

namespace xta {

VertexSet greedy_is(const Graph& graph) {
  Graph work = graph;
  VertexSet chosen(graph.n());
  while (const auto pick = work.min_degree_vertex()) {
    chosen.set(pick->vertex);
    VertexSet closed = work.neighbors(pick->vertex);
    closed.set(pick->vertex);
    work.remove_vertices(closed);
  }
  return chosen;
}

namespace {

class MisSearch {
 public:
  MisSearch(const Graph& graph, std::uint64_t& nodes) : graph_(graph), nodes_(nodes) {}

  VertexSet run() {
    best_ = greedy_is(graph_);
    best_size_ = best_.count();
    expand(graph_.alive(), VertexSet(graph_.n()), 0);
    return best_;
  }

 private:
  int degree_in(int v, const VertexSet& candidates) const {
    return graph_.adjacency(v).count_common(candidates);
  }

  void expand(VertexSet candidates, VertexSet current, int current_size) {
    ++nodes_;
    // Degree <= 1 vertices belong to some maximum independent set.
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = candidates.first(); v >= 0; v = candidates.next(v + 1)) {
        const int d = degree_in(v, candidates);
        if (d <= 1) {
          current.set(v);
          ++current_size;
          candidates -= graph_.adjacency(v);
          candidates.reset(v);
          changed = true;
        }
      }
    }
    if (candidates.empty()) {
      if (current_size > best_size_) {
        best_size_ = current_size;
        best_ = current;
      }
      return;
    }
    if (current_size + candidates.count() <= best_size_) return;

    int pivot = -1;
    int pivot_degree = -1;
    candidates.for_each([&](int v) {
      const int d = degree_in(v, candidates);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    });

    VertexSet with = candidates - graph_.adjacency(pivot);
    with.reset(pivot);
    VertexSet included = current;
    included.set(pivot);
    expand(std::move(with), std::move(included), current_size + 1);

    candidates.reset(pivot);
    expand(std::move(candidates), std::move(current), current_size);
  }

  const Graph& graph_;
  std::uint64_t& nodes_;
  VertexSet best_;
  int best_size_ = 0;
};

bool enumerate_from(const Graph& graph, const VertexSet& candidates, int need,
                    VertexSet& chosen) {
  if (need == 0) return true;
  if (candidates.count() < need) return false;
  for (int v = candidates.first(); v >= 0; v = candidates.next(v + 1)) {
    // Later picks come only from vertices after v.
    VertexSet rest = candidates - graph.adjacency(v);
    for (int u = rest.first(); u >= 0 && u <= v; u = rest.next(u + 1)) rest.reset(u);
    chosen.set(v);
    if (enumerate_from(graph, rest, need - 1, chosen)) return true;
    chosen.reset(v);
  }
  return false;
}

class VcSearch {
 public:
  explicit VcSearch(const Hypergraph& h) : n_(h.n()), edges_(h.edge_sets()) {}

  VertexSet run(VertexSet upper) {
    best_ = std::move(upper);
    best_size_ = best_.count();
    expand(VertexSet(n_), 0, VertexSet(n_));
    return best_;
  }

 private:
  // Pairwise disjoint uncovered edges, each needing its own cover vertex.
  int disjoint_lower_bound(const VertexSet& chosen, const VertexSet& excluded) const {
    VertexSet used(n_);
    int bound = 0;
    for (const auto& e : edges_) {
      if (e.intersects(chosen)) continue;
      const VertexSet open = e - excluded;
      if (!open.intersects(used)) {
        used |= open;
        ++bound;
      }
    }
    return bound;
  }

  void expand(const VertexSet& chosen, int chosen_size, const VertexSet& excluded) {
    // Branch on the uncovered edge with the fewest admissible vertices.
    const VertexSet* branch_edge = nullptr;
    int branch_open = 0;
    for (const auto& e : edges_) {
      if (e.intersects(chosen)) continue;
      const int open = e.count() - e.count_common(excluded);
      if (open == 0) return;  // infeasible
      if (branch_edge == nullptr || open < branch_open) {
        branch_edge = &e;
        branch_open = open;
      }
    }
    if (branch_edge == nullptr) {
      if (chosen_size < best_size_) {
        best_size_ = chosen_size;
        best_ = chosen;
      }
      return;
    }
    if (chosen_size + disjoint_lower_bound(chosen, excluded) >= best_size_) return;

    // The i-th child takes the i-th open vertex and rules out the earlier ones.
    VertexSet ruled_out = excluded;
    const VertexSet open = *branch_edge - excluded;
    open.for_each([&](int v) {
      VertexSet next = chosen;
      next.set(v);
      expand(next, chosen_size + 1, ruled_out);
      ruled_out.set(v);
    });
  }

  int n_;
  std::vector<VertexSet> edges_;
  VertexSet best_;
  int best_size_ = 0;
};

class ExactLeaf final : public LeafIsSolver {
 public:
  std::string_view name() const override { return "exact"; }
  VertexSet solve(const Graph& graph) const override { return exact_mis(graph); }
  double advertised_ratio(int) const override { return 1.0; }
};

class GreedyLeaf final : public LeafIsSolver {
 public:
  std::string_view name() const override { return "greedy"; }
  VertexSet solve(const Graph& graph) const override { return greedy_is(graph); }
  double advertised_ratio(int max_degree) const override { return max_degree + 1.0; }
};

// Enumerates independent sets of increasing size starting above the greedy
// size; the last size found is alpha(G), so the backend is exact.
class EnumLeaf final : public LeafIsSolver {
 public:
  std::string_view name() const override { return "enum"; }
  VertexSet solve(const Graph& graph) const override {
    VertexSet best = greedy_is(graph);
    for (int size = best.count() + 1;; ++size) {
      auto found = enumerate_is_of_size(graph, size);
      if (!found) return best;
      best = std::move(*found);
    }
  }
  double advertised_ratio(int) const override { return 1.0; }
};

}  // namespace

VertexSet exact_mis(const Graph& graph, std::uint64_t& nodes) {
  return MisSearch(graph, nodes).run();
}

VertexSet exact_mis(const Graph& graph) {
  std::uint64_t nodes = 0;
  return exact_mis(graph, nodes);
}

std::optional<VertexSet> enumerate_is_of_size(const Graph& graph, int size) {
  require(size >= 0, "independent set size must be non-negative");
  VertexSet chosen(graph.n());
  if (enumerate_from(graph, graph.alive(), size, chosen)) return chosen;
  return std::nullopt;
}

VertexSet exact_vc(const Hypergraph& hypergraph) {
  return VcSearch(hypergraph).run(matching_vc(hypergraph));
}

VertexSet matching_vc(const Hypergraph& hypergraph) {
  VertexSet cover(hypergraph.n());
  for (const auto& e : hypergraph.edges()) {
    const bool covered = std::any_of(e.begin(), e.end(), [&](int v) { return cover.test(v); });
    if (!covered) {
      for (int v : e) cover.set(v);
    }
  }
  return cover;
}

std::unique_ptr<LeafIsSolver> make_leaf_solver(std::string_view name) {
  if (name == "exact") return std::make_unique<ExactLeaf>();
  if (name == "greedy") return std::make_unique<GreedyLeaf>();
  if (name == "enum") return std::make_unique<EnumLeaf>();
  throw InputError("unknown leaf solver '" + std::string(name) + "' (expected exact, greedy or enum)");
}

std::vector<std::string> leaf_solver_names() { return {"exact", "greedy", "enum"}; }

}  // namespace xta
