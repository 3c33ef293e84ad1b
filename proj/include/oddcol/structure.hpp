#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "oddcol/graph.hpp"

namespace oddcol {

/// A path (closed = false) or cycle (closed = true) given by its vertex
/// sequence; a cycle's last vertex is joined back to its first.
struct CyclePath {
  std::vector<Vertex> vertices;
  bool closed = false;

  std::size_t edge_count() const;
  std::vector<Edge> edges() const;
  bool contains(Vertex v) const;

  bool operator==(const CyclePath&) const = default;
};

/// Consecutive vertices adjacent, vertices distinct, cycles of length >= 3.
bool is_valid_in(const Graph& g, const CyclePath& c);
/// No edge of g joins two non-consecutive vertices of c.
bool is_chordless(const Graph& g, const CyclePath& c);
EdgeSubgraph as_subgraph(const Graph& g, const CyclePath& c);

/// Cap on search extensions. Running past it raises BudgetExceeded.
struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
};

/// Chordless cycle through e, avoiding `avoid`, whose deletion leaves g
/// connected. The cycle is listed as min(e), max(e), ... and is the
/// lexicographically least such sequence. Requires g 3-connected.
CyclePath nonseparating_chordless_cycle(const Graph& g, Edge e, Vertex avoid, SearchBudget budget = {});

/// Lexicographically least chordless w–u path with connected complement.
/// Requires g 3-connected and w, u nonadjacent.
CyclePath nonseparating_chordless_path(const Graph& g, Vertex w, Vertex u, SearchBudget budget = {});

/// Path between two even-degree vertices used by the two-even coloring.
///
/// An adjacent even pair gives a single edge. Otherwise the shortest
/// chordless path between even vertices with connected complement (least
/// sequence among equals), truncated at its first even internal vertex while
/// one exists. Requires g 3-connected, odd order, two even vertices.
CyclePath shortest_even_endpoint_path(const Graph& g, SearchBudget budget = {});

/// Adjacent (w, u) with g − w and g − {w, u} connected; first in edge order.
/// Requires g connected Eulerian with at least one edge.
std::pair<Vertex, Vertex> eulerian_removable_pair(const Graph& g);

/// Lexicographically first nonadjacent (x, y) with g − {x, y} connected.
/// Requires g connected and neither a cycle nor complete.
std::pair<Vertex, Vertex> nonadjacent_removable_pair(const Graph& g);

/// The two alternating arc unions of a cycle relative to an even vertex set.
struct CycleSplit {
  EdgeSubgraph first;
  EdgeSubgraph second;
};

/// Walks c (in its listed direction) from its lowest-index s-vertex and
/// hands the arcs between consecutive s-vertices out to first, second,
/// first, ... With s empty the whole cycle goes to first.
CycleSplit cycle_split(const Graph& g, const CyclePath& c, std::span<const Vertex> s);

}  // namespace oddcol
