#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "xta/graph.hpp"

namespace xta {

// DIMACS .col: "c" comments, one "p edge n m" header, "e u v" lines with
// 1-based endpoints. Duplicate edges collapse; self-loops are rejected.
Graph parse_dimacs_col(std::istream& in);
Graph parse_dimacs_col(std::string_view text);
/// Writes the alive edges; comment lines are emitted first, each prefixed "c ".
void write_dimacs_col(std::ostream& out, const Graph& graph,
                      const std::vector<std::string>& comments = {});

// Hypergraphs: "p hedge n m k" header, "h v1 ... vj" lines, 1-based, 1 <= j <= k.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
void write_hypergraph(std::ostream& out, const Hypergraph& hypergraph);
std::string emit_hypergraph(const Hypergraph& hypergraph);

/// Whole file contents; InputError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace xta
