#pragma once

#include <iosfwd>
#include <string>

#include "flexcol/graph.hpp"

namespace flexcol {

// graph6, per the standard format (n <= 258047 here).
Graph read_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

// Line-oriented edge list "u v". Lines starting with '#' are comments.
// A single-token line gives the vertex count (needed for trailing
// isolated vertices); otherwise n = max id + 1.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

enum class GraphFormat { g6, edges };

Graph load_graph(const std::string& path, GraphFormat fmt);

}  // namespace flexcol
