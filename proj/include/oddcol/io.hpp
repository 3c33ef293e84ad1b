#pragma once

#include <iosfwd>
#include <string>

#include "oddcol/coloring.hpp"
#include "oddcol/graph.hpp"

namespace oddcol {

/// Edge list: "u v" per line, '#' starts a comment line, an optional
/// "n <count>" line fixes the vertex count (otherwise 1 + largest index).
/// Loops, repeated pairs and malformed lines raise ParseError.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);
/// Writes the "n" header followed by the edges in ascending order.
void write_edge_list(std::ostream& out, const Graph& g);

/// Coloring: "u v c" per line with c >= 1. A "# method: ..." comment sets
/// the provenance.
EdgeColoring parse_coloring(std::istream& in);
EdgeColoring read_coloring(const std::string& path);
void write_coloring(std::ostream& out, const EdgeColoring& c);

/// Named color for class c: red, blue, green, orange for 1..4, gray beyond.
const char* dot_color(int c);
/// One undirected DOT graph, vertices then edges in ascending order. With a
/// coloring, every edge carries its class color; the coloring must be total.
void write_dot(std::ostream& out, const Graph& g, const EdgeColoring* coloring = nullptr);

}  // namespace oddcol
