#include "xta/coloring.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "xta/errors.hpp"
#include "xta/random.hpp"

namespace xta {

namespace {

using Mask = std::uint32_t;
using Wide = boost::multiprecision::uint512_t;

// Alive subgraph relabelled onto bits 0..m-1.
struct CompactGraph {
  std::vector<int> vertices;
  std::vector<Mask> adjacency;

  int size() const { return static_cast<int>(vertices.size()); }
  Mask all() const { return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1; }
};

CompactGraph compact(const Graph& graph) {
  CompactGraph cg;
  cg.vertices = graph.alive().to_vector();
  std::vector<int> index(static_cast<std::size_t>(graph.n()), -1);
  for (std::size_t i = 0; i < cg.vertices.size(); ++i) index[static_cast<std::size_t>(cg.vertices[i])] = static_cast<int>(i);
  cg.adjacency.assign(cg.vertices.size(), 0);
  for (std::size_t i = 0; i < cg.vertices.size(); ++i) {
    graph.neighbors(cg.vertices[i]).for_each([&](int u) {
      cg.adjacency[i] |= Mask{1} << index[static_cast<std::size_t>(u)];
    });
  }
  return cg;
}

// Adjacency of the subgraph induced by `subset`, relabelled onto 0..|subset|-1.
std::vector<Mask> restrict_to(const std::vector<Mask>& adjacency, Mask subset) {
  std::vector<int> bits;
  for (Mask s = subset; s != 0; s &= s - 1) bits.push_back(std::countr_zero(s));
  std::vector<Mask> out(bits.size(), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    for (std::size_t j = 0; j < bits.size(); ++j) {
      if ((adjacency[static_cast<std::size_t>(bits[i])] >> bits[j]) & 1U) out[i] |= Mask{1} << j;
    }
  }
  return out;
}

// i(S) for every S ⊆ {0..m-1}, counting the empty set.
std::vector<std::uint32_t> independent_set_counts(const std::vector<Mask>& adjacency) {
  const int m = static_cast<int>(adjacency.size());
  std::vector<std::uint32_t> counts(std::size_t{1} << m);
  counts[0] = 1;
  for (Mask s = 1; s < (Mask{1} << m); ++s) {
    const int v = std::countr_zero(s);
    const Mask without = s & (s - 1);
    counts[s] = counts[without] + counts[without & ~adjacency[static_cast<std::size_t>(v)]];
  }
  return counts;
}

Wide power(std::uint32_t base, int exponent) {
  Wide result = 1;
  Wide b = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= b;
    if (e > 1) b *= b;
  }
  return result;
}

// Number of k-tuples of independent sets covering all vertices, tested for > 0.
// Each term is below 2^(m*k) <= 2^400 and there are at most 2^20 terms, so
// the two running sums stay inside 512 bits.
bool k_colorable(const std::vector<Mask>& adjacency, int k) {
  const int m = static_cast<int>(adjacency.size());
  if (m == 0) return true;
  if (k <= 0) return false;
  const auto counts = independent_set_counts(adjacency);
  Wide positive = 0;
  Wide negative = 0;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    const Wide term = power(counts[s], k);
    if ((m - std::popcount(s)) % 2 == 0) {
      positive += term;
    } else {
      negative += term;
    }
  }
  return positive > negative;
}

int chromatic_number_of(const std::vector<Mask>& adjacency) {
  const int m = static_cast<int>(adjacency.size());
  if (m == 0) return 0;
  int lo = 1;
  int hi = m;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (k_colorable(adjacency, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

// Bron-Kerbosch over non-adjacency: maximal independent sets of the subgraph
// induced by `within` that contain `chosen`. Stops when visit returns true.
template <typename Visit>
bool maximal_independent_sets(const std::vector<Mask>& adjacency, Mask chosen, Mask candidates,
                              Mask excluded, Visit& visit) {
  if (candidates == 0 && excluded == 0) return visit(chosen);
  for (Mask rest = candidates; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const Mask bit = Mask{1} << v;
    const Mask blocked = adjacency[static_cast<std::size_t>(v)] | bit;
    if (maximal_independent_sets(adjacency, chosen | bit, candidates & ~blocked,
                                 excluded & ~blocked, visit)) {
      return true;
    }
    candidates &= ~bit;
    excluded |= bit;
  }
  return false;
}

void require_optcol_size(int m) {
  if (m > kMaxOptcolVertices) {
    throw ContractViolation("exact coloring supports at most " +
                            std::to_string(kMaxOptcolVertices) + " alive vertices (got " +
                            std::to_string(m) + ")");
  }
}

bool extend_coloring(const std::vector<Mask>& adjacency, std::vector<int>& color, int vertex,
                     int used, int k) {
  const int m = static_cast<int>(adjacency.size());
  if (vertex == m) return true;
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool clash = false;
    for (int u = 0; u < vertex && !clash; ++u) {
      clash = ((adjacency[static_cast<std::size_t>(vertex)] >> u) & 1U) != 0 &&
              color[static_cast<std::size_t>(u)] == c;
    }
    if (clash) continue;
    color[static_cast<std::size_t>(vertex)] = c;
    if (extend_coloring(adjacency, color, vertex + 1, std::max(used, c + 1), k)) return true;
  }
  return false;
}

}  // namespace

bool verify_coloring(const Graph& graph, const Coloring& coloring) {
  VertexSet seen(graph.n());
  for (const auto& cls : coloring.classes) {
    if (cls.universe() != graph.n() || cls.empty()) return false;
    if (cls.intersects(seen)) return false;
    if (!cls.is_subset_of(graph.alive())) return false;
    if (!graph.is_independent(cls)) return false;
    seen |= cls;
  }
  return seen == graph.alive();
}

int chromatic_number(const Graph& graph) {
  require_optcol_size(graph.alive_count());
  return chromatic_number_of(compact(graph).adjacency);
}

Coloring optcol(const Graph& graph) {
  require_optcol_size(graph.alive_count());
  const CompactGraph cg = compact(graph);
  int k = chromatic_number_of(cg.adjacency);
  Coloring result;
  Mask remaining = cg.all();
  while (remaining != 0) {
    Mask cls = 0;
    if (k == 1) {
      cls = remaining;
    } else {
      const int v0 = std::countr_zero(remaining);
      const Mask bit = Mask{1} << v0;
      auto fits = [&](Mask candidate) {
        if (!k_colorable(restrict_to(cg.adjacency, remaining & ~candidate), k - 1)) return false;
        cls = candidate;
        return true;
      };
      const Mask start = remaining & ~cg.adjacency[static_cast<std::size_t>(v0)] & ~bit;
      if (!maximal_independent_sets(cg.adjacency, bit, start, Mask{0}, fits)) {
        throw std::logic_error("optcol: no class extends to a (k-1)-coloring of the residual");
      }
    }
    VertexSet out(graph.n());
    for (Mask s = cls; s != 0; s &= s - 1) {
      out.set(cg.vertices[static_cast<std::size_t>(std::countr_zero(s))]);
    }
    result.classes.push_back(std::move(out));
    remaining &= ~cls;
    --k;
  }
  if (!verify_coloring(graph, result)) {
    throw std::logic_error("optcol produced an improper coloring");
  }
  return result;
}

int chromatic_bruteforce(const Graph& graph) {
  const int m = graph.alive_count();
  if (m > kMaxBruteforceColoringVertices) {
    throw ContractViolation("brute-force coloring supports at most " +
                            std::to_string(kMaxBruteforceColoringVertices) +
                            " alive vertices (got " + std::to_string(m) + ")");
  }
  const CompactGraph cg = compact(graph);
  std::vector<int> color(static_cast<std::size_t>(m), -1);
  for (int k = 1; k <= m; ++k) {
    if (extend_coloring(cg.adjacency, color, 0, 0, k)) return k;
  }
  return 0;
}

double min_coloring_ratio() {
  double lo = 1.0;
  double hi = 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::log2(mid) > 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

bool coloring_ratio_admissible(double r) {
  if (!(r > 1.0)) return false;
  const double t = r * std::log2(r);
  return t > 1.0 && r / std::log(t) >= 1.0;
}

PeelingPlan peeling_plan(int n, double r, int inner_trials) {
  if (!coloring_ratio_admissible(r)) {
    throw ContractViolation("coloring ratio r = " + std::to_string(r) +
                            " is below the admissible minimum (r*log2(r) must exceed 1, r > " +
                            std::to_string(min_coloring_ratio()) + ")");
  }
  const double t = r * std::log2(r);
  PeelingPlan plan{};
  plan.threshold = n / t;
  plan.inner.p = std::max(1.0, r / std::log(t));
  plan.inner.d = std::max(static_cast<int>(std::ceil(2.0 * plan.inner.p)), 4);
  plan.inner.leaf = "exact";
  plan.inner.trials = inner_trials;
  return plan;
}

ColoringResult chr_approx(const Graph& graph, double r, std::uint64_t seed, int inner_trials) {
  const auto start = std::chrono::steady_clock::now();
  PeelingPlan plan = peeling_plan(graph.alive_count(), r, inner_trials);
  ColoringResult result;
  Graph work = graph;
  while (work.alive_count() > 0 && work.alive_count() >= plan.threshold) {
    plan.inner.seed = combine_keys(seed, static_cast<std::uint64_t>(result.peeled));
    IsResult peel = boosted_is(work, plan.inner);
    if (peel.set.empty()) throw std::logic_error("peeling step returned an empty class");
    result.stats += peel.stats;
    work.remove_vertices(peel.set);
    result.coloring.classes.push_back(std::move(peel.set));
    ++result.peeled;
  }
  Coloring rest = optcol(work);
  for (auto& cls : rest.classes) result.coloring.classes.push_back(std::move(cls));
  result.stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

ColoringResult chr_approx_wrapped(const Graph& graph, double r, std::uint64_t seed,
                                  int inner_trials) {
  if (!coloring_ratio_admissible(r - 2.0)) {
    throw ContractViolation("wrapped coloring needs r - 2 > " + std::to_string(min_coloring_ratio()) +
                            ", got r = " + std::to_string(r));
  }
  return chr_approx(graph, r - 2.0, seed, inner_trials);
}

}  // namespace xta
