#include "oddcol/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

#include "oddcol/error.hpp"

namespace oddcol {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

int to_index(std::string_view token, std::size_t line, const char* what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size() || value < 0) {
    throw ParseError(line, std::string("expected a nonnegative integer ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path + "'");
  return in;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  int declared = -1;
  int largest = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto tok = split(text);
    if (tok[0] == "n") {
      if (tok.size() != 2) throw ParseError(line, "header must read 'n <count>'");
      if (declared >= 0) throw ParseError(line, "repeated vertex-count header");
      if (!edges.empty()) throw ParseError(line, "vertex-count header after the first edge");
      declared = to_index(tok[1], line, "vertex count");
      continue;
    }
    if (tok.size() != 2) throw ParseError(line, "expected 'u v'");
    const int a = to_index(tok[0], line, "endpoint");
    const int b = to_index(tok[1], line, "endpoint");
    if (a == b) throw ParseError(line, "loop at vertex " + std::to_string(a));
    if (declared >= 0 && std::max(a, b) >= declared) {
      throw ParseError(line, "endpoint " + std::to_string(std::max(a, b)) + " outside the declared vertex count");
    }
    const Edge e{a, b};
    if (!seen.insert(e).second) throw ParseError(line, "repeated edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    edges.push_back(e);
    largest = std::max({largest, a, b});
  }
  return Graph(declared >= 0 ? declared : largest + 1, edges);
}

Graph read_edge_list(const std::string& path) {
  auto in = open(path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

EdgeColoring parse_coloring(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  std::string provenance;
  std::vector<std::pair<Edge, int>> assignment;
  std::set<Edge> seen;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty()) continue;
    if (text.front() == '#') {
      constexpr std::string_view tag = "# method:";
      if (text.substr(0, tag.size()) == tag) provenance = std::string(trim(text.substr(tag.size())));
      continue;
    }
    const auto tok = split(text);
    if (tok.size() != 3) throw ParseError(line, "expected 'u v c'");
    const int a = to_index(tok[0], line, "endpoint");
    const int b = to_index(tok[1], line, "endpoint");
    const int c = to_index(tok[2], line, "color");
    if (a == b) throw ParseError(line, "loop at vertex " + std::to_string(a));
    if (c < 1) throw ParseError(line, "colors start at 1");
    const Edge e{a, b};
    if (!seen.insert(e).second) throw ParseError(line, "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " colored twice");
    assignment.emplace_back(e, c);
  }
  return EdgeColoring(std::move(assignment), provenance);
}

EdgeColoring read_coloring(const std::string& path) {
  auto in = open(path);
  return parse_coloring(in);
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
  for (std::size_t i = 0; i < c.size(); ++i) out << c.edges()[i].u << ' ' << c.edges()[i].v << ' ' << c.colors()[i] << '\n';
}

const char* dot_color(int c) {
  switch (c) {
    case 1:
      return "red";
    case 2:
      return "blue";
    case 3:
      return "green";
    case 4:
      return "orange";
    default:
      return "gray";
  }
}

void write_dot(std::ostream& out, const Graph& g, const EdgeColoring* coloring) {
  if (coloring) {
    for (const Edge e : coloring->edges()) {
      if (!g.has_edge(e)) {
        throw PartialColoringError("colored pair " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not an edge");
      }
    }
    if (coloring->size() != g.edge_count()) throw PartialColoringError("coloring does not cover every edge");
  }
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (coloring) {
      const int c = *coloring->color_of(e);
      out << " [color=" << dot_color(c) << ", label=\"" << c << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace oddcol
