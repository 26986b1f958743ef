#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "xta/graph.hpp"

namespace xta {

// A local assignment packs the value of scope[j] into bit j.
using LocalAssignment = std::uint32_t;

inline constexpr int kMaxPredicateArity = 16;
inline constexpr int kMaxBruteforceCspVars = 20;

struct Predicate {
  std::vector<int> scope;                  // distinct variables, 0-based
  std::vector<LocalAssignment> accepting;  // duplicate-free

  int arity() const noexcept { return static_cast<int>(scope.size()); }
  bool accepts(LocalAssignment local) const;
};

// Constraint satisfaction problem over Boolean variables x_0..x_{n-1}.
struct Csp {
  int n_vars = 0;
  std::vector<Predicate> predicates;

  int m() const noexcept { return static_cast<int>(predicates.size()); }
  /// Throws ContractViolation on out-of-range or repeated scope variables,
  /// assignments wider than the scope, or duplicate accepting assignments.
  void validate() const;
  /// Number of predicates satisfied by a full assignment (bit i = x_i).
  int satisfied_count(std::uint64_t assignment) const;
};

/// Largest accepting list over all predicates; 0 without predicates.
int freeness(const Csp& csp);

/// Maximum number of simultaneously satisfiable predicates, over all 2^n
/// assignments. At most kMaxBruteforceCspVars variables.
int csp_val_bruteforce(const Csp& csp);

struct FglssLabel {
  int predicate;
  LocalAssignment assignment;

  friend bool operator==(const FglssLabel&, const FglssLabel&) = default;
};

struct FglssGraph {
  Graph graph;
  std::vector<FglssLabel> labels;  // labels[v] for vertex v
};

/// One vertex per (predicate, accepting assignment), in predicate order then
/// accepting-list order; an edge joins two vertices whose assignments disagree
/// on a shared variable. alpha of the result equals csp_val_bruteforce.
FglssGraph fglss_reduce(const Csp& csp);

/// Reads the partial assignment named by an independent set's labels.
/// Returns per-variable values (-1 unassigned); ContractViolation on a conflict.
std::vector<int> labels_to_assignment(const Csp& csp, const FglssGraph& reduced,
                                      const VertexSet& independent);

/// m predicates with uniformly random scopes of `arity` distinct variables and
/// `accepting_count` distinct uniformly random accepting assignments each.
Csp gen_random_csp(int n_vars, int m, int arity, int accepting_count, std::uint64_t seed);

// Text format:
//   c comment
//   p csp <n_vars> <m>
//   s v1 .. vq        scope of the next predicate, 1-based variables
//   a b1 .. bq        one accepting assignment of the current scope (bits 0/1)
Csp parse_csp(std::istream& in);
Csp parse_csp(std::string_view text);
void write_csp(std::ostream& out, const Csp& csp);

/// Sidecar lines "<vertex> <predicate> <bits>": 1-based vertex and predicate,
/// bits in scope order.
void write_fglss_labels(std::ostream& out, const Csp& csp, const FglssGraph& reduced);

}  // namespace xta
