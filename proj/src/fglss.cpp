#include "xta/fglss.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "xta/errors.hpp"
#include "xta/random.hpp"

namespace xta {

bool Predicate::accepts(LocalAssignment local) const {
  return std::find(accepting.begin(), accepting.end(), local) != accepting.end();
}

void Csp::validate() const {
  require(n_vars >= 0, "variable count must be non-negative");
  for (std::size_t i = 0; i < predicates.size(); ++i) {
    const auto& pred = predicates[i];
    const std::string where = "predicate " + std::to_string(i + 1);
    require(pred.arity() <= kMaxPredicateArity, where + ": arity exceeds " +
                                                    std::to_string(kMaxPredicateArity));
    std::vector<int> scope = pred.scope;
    std::sort(scope.begin(), scope.end());
    require(scope.empty() || (scope.front() >= 0 && scope.back() < n_vars),
            where + ": scope variable out of range");
    require(std::adjacent_find(scope.begin(), scope.end()) == scope.end(),
            where + ": scope repeats a variable");
    std::vector<LocalAssignment> acc = pred.accepting;
    std::sort(acc.begin(), acc.end());
    require(std::adjacent_find(acc.begin(), acc.end()) == acc.end(),
            where + ": duplicate accepting assignment");
    require(acc.empty() || acc.back() < (LocalAssignment{1} << pred.arity()),
            where + ": accepting assignment wider than its scope");
  }
}

int Csp::satisfied_count(std::uint64_t assignment) const {
  int satisfied = 0;
  for (const auto& pred : predicates) {
    LocalAssignment local = 0;
    for (int j = 0; j < pred.arity(); ++j) {
      local |= static_cast<LocalAssignment>((assignment >> pred.scope[static_cast<std::size_t>(j)]) & 1U) << j;
    }
    if (pred.accepts(local)) ++satisfied;
  }
  return satisfied;
}

int freeness(const Csp& csp) {
  std::size_t best = 0;
  for (const auto& pred : csp.predicates) best = std::max(best, pred.accepting.size());
  return static_cast<int>(best);
}

int csp_val_bruteforce(const Csp& csp) {
  if (csp.n_vars > kMaxBruteforceCspVars) {
    throw ContractViolation("brute-force CSP value supports at most " +
                            std::to_string(kMaxBruteforceCspVars) + " variables (got " +
                            std::to_string(csp.n_vars) + ")");
  }
  csp.validate();
  int best = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << csp.n_vars); ++a) {
    best = std::max(best, csp.satisfied_count(a));
  }
  return best;
}

namespace {

int value_of(const Predicate& pred, LocalAssignment local, int var) {
  const auto it = std::find(pred.scope.begin(), pred.scope.end(), var);
  if (it == pred.scope.end()) return -1;
  return static_cast<int>((local >> (it - pred.scope.begin())) & 1U);
}

bool conflict(const Predicate& a, LocalAssignment la, const Predicate& b, LocalAssignment lb) {
  for (int j = 0; j < a.arity(); ++j) {
    const int var = a.scope[static_cast<std::size_t>(j)];
    const int other = value_of(b, lb, var);
    if (other >= 0 && other != static_cast<int>((la >> j) & 1U)) return true;
  }
  return false;
}

}  // namespace

FglssGraph fglss_reduce(const Csp& csp) {
  csp.validate();
  std::vector<FglssLabel> labels;
  for (int i = 0; i < csp.m(); ++i) {
    for (LocalAssignment a : csp.predicates[static_cast<std::size_t>(i)].accepting) {
      labels.push_back({i, a});
    }
  }
  const int n = static_cast<int>(labels.size());
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    const auto& lu = labels[static_cast<std::size_t>(u)];
    const auto& pu = csp.predicates[static_cast<std::size_t>(lu.predicate)];
    for (int v = u + 1; v < n; ++v) {
      const auto& lv = labels[static_cast<std::size_t>(v)];
      const auto& pv = csp.predicates[static_cast<std::size_t>(lv.predicate)];
      if (conflict(pu, lu.assignment, pv, lv.assignment)) g.add_edge(u, v);
    }
  }
  return {std::move(g), std::move(labels)};
}

std::vector<int> labels_to_assignment(const Csp& csp, const FglssGraph& reduced,
                                      const VertexSet& independent) {
  std::vector<int> values(static_cast<std::size_t>(csp.n_vars), -1);
  independent.for_each([&](int v) {
    const auto& label = reduced.labels[static_cast<std::size_t>(v)];
    const auto& pred = csp.predicates[static_cast<std::size_t>(label.predicate)];
    for (int j = 0; j < pred.arity(); ++j) {
      const int bit = static_cast<int>((label.assignment >> j) & 1U);
      int& slot = values[static_cast<std::size_t>(pred.scope[static_cast<std::size_t>(j)])];
      require(slot < 0 || slot == bit, "labels assign two values to one variable");
      slot = bit;
    }
  });
  return values;
}

Csp gen_random_csp(int n_vars, int m, int arity, int accepting_count, std::uint64_t seed) {
  require(n_vars >= 1 && m >= 0, "CSP generator needs n_vars >= 1 and m >= 0");
  require(arity >= 1 && arity <= n_vars, "arity must satisfy 1 <= arity <= n_vars");
  require(arity <= kMaxPredicateArity, "arity exceeds " + std::to_string(kMaxPredicateArity));
  require(accepting_count >= 1 && accepting_count <= (1 << arity),
          "accepting count must satisfy 1 <= count <= 2^arity");
  SplitMix64 rng(seed);
  Csp csp;
  csp.n_vars = n_vars;
  std::vector<int> vars(static_cast<std::size_t>(n_vars));
  std::vector<LocalAssignment> locals(std::size_t{1} << arity);
  for (int i = 0; i < m; ++i) {
    Predicate pred;
    std::iota(vars.begin(), vars.end(), 0);
    for (int j = 0; j < arity; ++j) {
      const auto pick = j + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n_vars - j)));
      std::swap(vars[static_cast<std::size_t>(j)], vars[static_cast<std::size_t>(pick)]);
    }
    pred.scope.assign(vars.begin(), vars.begin() + arity);

    std::iota(locals.begin(), locals.end(), LocalAssignment{0});
    const auto total = static_cast<int>(locals.size());
    for (int j = 0; j < accepting_count; ++j) {
      const auto pick = j + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(total - j)));
      std::swap(locals[static_cast<std::size_t>(j)], locals[static_cast<std::size_t>(pick)]);
    }
    pred.accepting.assign(locals.begin(), locals.begin() + accepting_count);
    std::sort(pred.accepting.begin(), pred.accepting.end());
    csp.predicates.push_back(std::move(pred));
  }
  return csp;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

long long integer_at(const std::string& tok, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) throw ParseError(line, "expected integer, got '" + tok + "'");
  return v;
}

}  // namespace

Csp parse_csp(std::istream& in) {
  std::optional<Csp> csp;
  long long declared_m = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (csp) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "csp") {
        throw ParseError(line_no, "malformed header, expected 'p csp n m'");
      }
      const long long n = integer_at(tok[2], line_no);
      declared_m = integer_at(tok[3], line_no);
      if (n < 0 || declared_m < 0 || n > (1 << 24)) throw ParseError(line_no, "malformed header counts");
      csp.emplace();
      csp->n_vars = static_cast<int>(n);
    } else if (tok[0] == "s") {
      if (!csp) throw ParseError(line_no, "scope line before 'p csp' header");
      if (static_cast<int>(tok.size()) - 1 > kMaxPredicateArity) {
        throw ParseError(line_no, "scope wider than " + std::to_string(kMaxPredicateArity));
      }
      Predicate pred;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const long long v = integer_at(tok[i], line_no);
        if (v < 1 || v > csp->n_vars) {
          throw ParseError(line_no, "variable " + tok[i] + " out of range 1.." +
                                        std::to_string(csp->n_vars));
        }
        if (std::find(pred.scope.begin(), pred.scope.end(), v - 1) != pred.scope.end()) {
          throw ParseError(line_no, "scope repeats variable " + tok[i]);
        }
        pred.scope.push_back(static_cast<int>(v - 1));
      }
      csp->predicates.push_back(std::move(pred));
    } else if (tok[0] == "a") {
      if (!csp || csp->predicates.empty()) {
        throw ParseError(line_no, "accepting assignment before any scope line");
      }
      auto& pred = csp->predicates.back();
      if (static_cast<int>(tok.size()) - 1 != pred.arity()) {
        throw ParseError(line_no, "assignment has " + std::to_string(tok.size() - 1) +
                                      " bits but the scope has arity " +
                                      std::to_string(pred.arity()));
      }
      LocalAssignment local = 0;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == "1") {
          local |= LocalAssignment{1} << (i - 1);
        } else if (tok[i] != "0") {
          throw ParseError(line_no, "assignment bits must be 0 or 1, got '" + tok[i] + "'");
        }
      }
      if (pred.accepts(local)) throw ParseError(line_no, "duplicate accepting assignment");
      pred.accepting.push_back(local);
    } else {
      throw ParseError(line_no, "unrecognized line type '" + tok[0] + "'");
    }
  }
  if (!csp) throw ParseError(line_no + 1, "missing 'p csp n m' header");
  if (csp->m() != declared_m) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_m) +
                                  " predicates but " + std::to_string(csp->m()) + " were given");
  }
  return std::move(*csp);
}

Csp parse_csp(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_csp(in);
}

void write_csp(std::ostream& out, const Csp& csp) {
  out << "p csp " << csp.n_vars << ' ' << csp.m() << '\n';
  for (const auto& pred : csp.predicates) {
    out << 's';
    for (int v : pred.scope) out << ' ' << v + 1;
    out << '\n';
    for (LocalAssignment a : pred.accepting) {
      out << 'a';
      for (int j = 0; j < pred.arity(); ++j) out << ' ' << ((a >> j) & 1U);
      out << '\n';
    }
  }
}

void write_fglss_labels(std::ostream& out, const Csp& csp, const FglssGraph& reduced) {
  for (std::size_t v = 0; v < reduced.labels.size(); ++v) {
    const auto& label = reduced.labels[v];
    const auto& pred = csp.predicates[static_cast<std::size_t>(label.predicate)];
    out << v + 1 << ' ' << label.predicate + 1 << ' ';
    for (int j = 0; j < pred.arity(); ++j) out << ((label.assignment >> j) & 1U);
    out << '\n';
  }
}

}  // namespace xta
