#include "xta/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "xta/errors.hpp"

namespace xta {

namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

long long parse_integer(const std::string& tok, int line, const char* what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  return value;
}

int parse_vertex(const std::string& tok, int line, int n) {
  const long long v = parse_integer(tok, line, "vertex index");
  if (v < 1 || v > n) {
    throw ParseError(line, "vertex index " + tok + " out of range 1.." + std::to_string(n));
  }
  return static_cast<int>(v - 1);
}

}  // namespace

Graph parse_dimacs_col(std::istream& in) {
  std::optional<Graph> graph;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (graph) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError(line_no, "malformed header, expected 'p edge n m'");
      }
      const long long n = parse_integer(tok[2], line_no, "vertex count");
      const long long m = parse_integer(tok[3], line_no, "edge count");
      if (n < 0 || m < 0 || n > (1 << 24)) throw ParseError(line_no, "malformed header counts");
      graph.emplace(static_cast<int>(n));
    } else if (tok[0] == "e") {
      if (!graph) throw ParseError(line_no, "edge line before 'p edge' header");
      if (tok.size() != 3) throw ParseError(line_no, "malformed edge line, expected 'e u v'");
      const int u = parse_vertex(tok[1], line_no, graph->n());
      const int v = parse_vertex(tok[2], line_no, graph->n());
      if (u == v) throw ParseError(line_no, "self-loop at line " + std::to_string(line_no));
      graph->add_edge(u, v);
    } else {
      throw ParseError(line_no, "unrecognized line type '" + tok[0] + "'");
    }
  }
  if (!graph) throw ParseError(line_no + 1, "missing 'p edge n m' header");
  return std::move(*graph);
}

Graph parse_dimacs_col(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs_col(in);
}

void write_dimacs_col(std::ostream& out, const Graph& graph,
                      const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  const auto edges = graph.edges();
  out << "p edge " << graph.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::optional<Hypergraph> h;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (h) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 5 || tok[1] != "hedge") {
        throw ParseError(line_no, "malformed header, expected 'p hedge n m k'");
      }
      const long long n = parse_integer(tok[2], line_no, "vertex count");
      const long long m = parse_integer(tok[3], line_no, "edge count");
      const long long k = parse_integer(tok[4], line_no, "edge size bound");
      if (n < 0 || m < 0 || k < 1 || n > (1 << 24)) {
        throw ParseError(line_no, "malformed header counts");
      }
      h.emplace(static_cast<int>(n), static_cast<int>(k));
    } else if (tok[0] == "h") {
      if (!h) throw ParseError(line_no, "edge line before 'p hedge' header");
      const int size = static_cast<int>(tok.size()) - 1;
      if (size == 0) throw ParseError(line_no, "empty hyperedge");
      if (size > h->k()) {
        throw ParseError(line_no, "edge size " + std::to_string(size) + " exceeds k = " +
                                      std::to_string(h->k()));
      }
      std::vector<int> vs;
      for (std::size_t i = 1; i < tok.size(); ++i) vs.push_back(parse_vertex(tok[i], line_no, h->n()));
      std::vector<int> sorted = vs;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParseError(line_no, "hyperedge repeats a vertex");
      }
      h->add_edge(std::move(vs));
    } else {
      throw ParseError(line_no, "unrecognized line type '" + tok[0] + "'");
    }
  }
  if (!h) throw ParseError(line_no + 1, "missing 'p hedge n m k' header");
  return std::move(*h);
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& hypergraph) {
  out << "p hedge " << hypergraph.n() << ' ' << hypergraph.edge_count() << ' ' << hypergraph.k()
      << '\n';
  for (const auto& e : hypergraph.edges()) {
    out << 'h';
    for (int v : e) out << ' ' << v + 1;
    out << '\n';
  }
}

std::string emit_hypergraph(const Hypergraph& hypergraph) {
  std::ostringstream out;
  write_hypergraph(out, hypergraph);
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("failed writing file '" + path.string() + "'");
}

}  // namespace xta
