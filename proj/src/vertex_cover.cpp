#include "xta/vertex_cover.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "xta/errors.hpp"
#include "xta/leaf_solvers.hpp"

namespace xta {

namespace {

struct SparsifyState {
  VertexSet forced;
  std::vector<VertexSet> edges;
};

class Sparsifier {
 public:
  Sparsifier(const Hypergraph& h, int d) : n_(h.n()), k_(h.k()), d_(d) {}

  void run(SparsifyState state, std::vector<SparsifiedBranch>& out) {
    normalize(state.edges);
    std::vector<int> degree(static_cast<std::size_t>(n_), 0);
    for (const auto& e : state.edges) e.for_each([&](int v) { ++degree[static_cast<std::size_t>(v)]; });
    int pivot = -1;
    for (int v = 0; v < n_; ++v) {
      if (degree[static_cast<std::size_t>(v)] >= d_ &&
          (pivot < 0 || degree[static_cast<std::size_t>(v)] > degree[static_cast<std::size_t>(pivot)])) {
        pivot = v;
      }
    }
    if (pivot < 0) {
      out.push_back(emit(state));
      return;
    }

    SparsifyState take = state;
    force(take, pivot);
    run(std::move(take), out);

    if (exclude(state, pivot)) run(std::move(state), out);
  }

 private:
  static void normalize(std::vector<VertexSet>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  static void force(SparsifyState& s, int v) {
    s.forced.set(v);
    std::erase_if(s.edges, [v](const VertexSet& e) { return e.test(v); });
  }

  // Removes v from every edge, then forces the members of unit edges until none
  // remain. False when some edge becomes empty.
  static bool exclude(SparsifyState& s, int v) {
    for (auto& e : s.edges) {
      if (!e.test(v)) continue;
      e.reset(v);
      if (e.empty()) return false;
    }
    while (true) {
      const auto unit = std::find_if(s.edges.begin(), s.edges.end(),
                                     [](const VertexSet& e) { return e.count() == 1; });
      if (unit == s.edges.end()) return true;
      force(s, unit->first());
    }
  }

  SparsifiedBranch emit(const SparsifyState& s) const {
    Hypergraph residual(n_, k_);
    for (const auto& e : s.edges) residual.add_edge(e.to_vector());
    return {s.forced, std::move(residual)};
  }

  int n_;
  int k_;
  int d_;
};

}  // namespace

SparsifiedFamily sparsify_vc(const Hypergraph& hypergraph, int d) {
  require(d >= 2, "sparsification degree threshold d must be >= 2");
  SparsifiedFamily family;
  family.d = d;
  Sparsifier(hypergraph, d).run({VertexSet(hypergraph.n()), hypergraph.edge_sets()},
                                family.branches);
  return family;
}

VcPipelineResult vc_pipeline(const Hypergraph& hypergraph, int d, std::string_view leaf) {
  VertexSet (*solve)(const Hypergraph&) = nullptr;
  if (leaf == "exact") {
    solve = exact_vc;
  } else if (leaf == "matching") {
    solve = matching_vc;
  } else {
    throw InputError("unknown vertex cover leaf '" + std::string(leaf) +
                     "' (expected exact or matching)");
  }
  const SparsifiedFamily family = sparsify_vc(hypergraph, d);
  VcPipelineResult result{VertexSet(hypergraph.n()), family.branch_count(), -1};
  std::optional<int> best_size;
  for (int i = 0; i < family.branch_count(); ++i) {
    const auto& branch = family.branches[static_cast<std::size_t>(i)];
    VertexSet cover = solve(branch.residual) | branch.forced;
    const int size = cover.count();
    if (!best_size || size < *best_size) {
      best_size = size;
      result.cover = std::move(cover);
      result.best_branch = i;
    }
  }
  return result;
}

double low_degree_vc_ratio_estimate(int k, long long max_degree) {
  require(k >= 1, "edge size bound k must be >= 1");
  require(max_degree >= 16, "ratio estimate needs maximum degree >= 16 (got " +
                                std::to_string(max_degree) + ")");
  const double ln_delta = std::log(static_cast<double>(max_degree));
  return k - static_cast<double>(k) * (k - 1) * std::log(ln_delta) / ln_delta;
}

}  // namespace xta
