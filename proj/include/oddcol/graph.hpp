#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace oddcol {

using Vertex = int;

/// Unordered vertex pair, stored with `u < v` (a loop keeps `u == v` and is
/// rejected wherever a Graph is built).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  constexpr auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on the dense vertex set [0, vertex_count).
///
/// Edges are kept sorted and adjacency lists ascending, so every traversal
/// built on top of this class is deterministic. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Throws PreconditionError on loops, repeated pairs or out-of-range ends.
  Graph(int vertex_count, std::span<const Edge> edges);
  Graph(int vertex_count, std::initializer_list<Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  bool is_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }
  /// Throws PreconditionError for an invalid index.
  int degree(Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  /// Position of `e` in `edges()`.
  std::optional<std::size_t> edge_index(Edge e) const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && vertex_count() == other.vertex_count(); }

 private:
  void require_vertex(Vertex v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Edge set inside a fixed vertex space.
///
/// The vertex space is the parent graph's vertex count; the covered vertex
/// set is the set of edge endpoints. Construction from a Graph checks that
/// every edge belongs to it. Set operations require equal vertex spaces.
class EdgeSubgraph {
 public:
  EdgeSubgraph() = default;
  explicit EdgeSubgraph(const Graph& parent) : vertex_space_(parent.vertex_count()) {}
  EdgeSubgraph(const Graph& parent, std::vector<Edge> edges);

  /// All edges of `g`.
  static EdgeSubgraph whole(const Graph& g);
  /// Edge set of `g` incident with `v`.
  static EdgeSubgraph star(const Graph& g, Vertex v);

  int vertex_space() const { return vertex_space_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(Edge e) const;
  bool covers(Vertex v) const { return degree(v) > 0; }

  int degree(Vertex v) const;
  std::vector<int> degrees() const;
  std::vector<Vertex> covered_vertices() const;
  std::size_t covered_count() const { return covered_vertices().size(); }
  /// True when every edge is an edge of `g` and the vertex spaces agree.
  bool is_subgraph_of(const Graph& g) const;
  Graph as_graph() const;

  bool operator==(const EdgeSubgraph&) const = default;

  friend EdgeSubgraph unite(const EdgeSubgraph& a, const EdgeSubgraph& b);
  friend EdgeSubgraph subtract(const EdgeSubgraph& a, const EdgeSubgraph& b);
  friend EdgeSubgraph intersect(const EdgeSubgraph& a, const EdgeSubgraph& b);
  friend EdgeSubgraph symmetric_difference(const EdgeSubgraph& a, const EdgeSubgraph& b);

 private:
  EdgeSubgraph(int vertex_space, std::vector<Edge> sorted_edges, bool)
      : vertex_space_(vertex_space), edges_(std::move(sorted_edges)) {}

  int vertex_space_ = 0;
  std::vector<Edge> edges_;
};

EdgeSubgraph unite(const EdgeSubgraph& a, const EdgeSubgraph& b);
EdgeSubgraph subtract(const EdgeSubgraph& a, const EdgeSubgraph& b);
EdgeSubgraph intersect(const EdgeSubgraph& a, const EdgeSubgraph& b);
/// (a ∪ b) − (a ∩ b). Throws PreconditionError on a vertex-space mismatch.
EdgeSubgraph symmetric_difference(const EdgeSubgraph& a, const EdgeSubgraph& b);

/// Connected pieces of an edge set, ordered by their lowest covered vertex.
std::vector<EdgeSubgraph> edge_components(const EdgeSubgraph& s);

/// Result of deleting vertices: the smaller graph plus both index maps.
struct Relabeled {
  Graph graph;
  std::vector<Vertex> to_parent;    // new index -> parent index
  std::vector<Vertex> from_parent;  // parent index -> new index, or -1

  Vertex lift(Vertex v) const { return to_parent[static_cast<std::size_t>(v)]; }
  Edge lift(Edge e) const { return {lift(e.u), lift(e.v)}; }
  Vertex map(Vertex v) const { return from_parent[static_cast<std::size_t>(v)]; }
  /// Re-expresses a subgraph of `graph` inside `parent`.
  EdgeSubgraph lift(const EdgeSubgraph& s, const Graph& parent) const;
};

/// g − X, vertices renumbered in ascending order.
Relabeled remove_vertices(const Graph& g, std::span<const Vertex> removed);
/// The graph spanned by the covered vertices of `s`, renumbered.
Relabeled compact(const EdgeSubgraph& s);
/// g − E(s) on the same vertex set.
Graph remove_edges(const Graph& g, const EdgeSubgraph& s);

std::vector<int> degrees(const Graph& g);
std::vector<Vertex> even_degree_vertices(const Graph& g);
int min_degree(const Graph& g);

/// Component label per vertex, labels assigned in order of lowest vertex.
std::vector<int> component_labels(const Graph& g);
/// A graph with no vertices is connected by convention.
bool is_connected(const Graph& g);
/// Whether g − X is connected (an empty remainder counts as connected).
bool is_connected_without(const Graph& g, std::span<const Vertex> removed);
bool is_acyclic(const Graph& g);
bool is_tree(const Graph& g);
bool is_eulerian(const Graph& g);
bool is_complete(const Graph& g);
/// Connected 2-regular graph.
bool is_cycle_graph(const Graph& g);
/// Side (0/1) per vertex, or nothing if an odd cycle exists.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// More than k vertices, connected, and no cut of fewer than k vertices.
/// Decided by unit-capacity vertex flows between nonadjacent pairs.
bool is_k_connected(const Graph& g, int k);

/// Endpoint policy for disjoint_paths. With sharing on, several paths may
/// start (or end) at the same terminal vertex; internal vertices are always
/// used at most once.
struct PathTerminals {
  bool share_sources = true;
  bool share_sinks = true;
};

/// k internally vertex-disjoint source-to-sink paths whose internal vertices
/// avoid sources ∪ sinks, or nothing when fewer than k exist. Each path is
/// listed from its source to its sink.
std::optional<std::vector<std::vector<Vertex>>> disjoint_paths(const Graph& g, std::span<const Vertex> sources,
                                                               std::span<const Vertex> sinks, int k,
                                                               PathTerminals terminals = {});

/// Breadth-first spanning tree from vertex 0, neighbors in ascending order.
/// Throws PreconditionError when g is disconnected.
EdgeSubgraph spanning_tree(const Graph& g);
/// Union of breadth-first trees of every component.
EdgeSubgraph spanning_forest(const Graph& g);

/// Vertex sequence of the unique path between `from` and `to` inside a
/// forest, or empty when they lie in different trees.
std::vector<Vertex> forest_path(const EdgeSubgraph& forest, Vertex from, Vertex to);

}  // namespace oddcol
