#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "oddcol/coloring.hpp"
#include "oddcol/graph.hpp"
#include "oddcol/structure.hpp"

namespace oddcol {

/// Odd coloring with at most three classes of a connected graph of even
/// order: an odd factor F = (E − T) ∪ J for a spanning tree T, and the
/// two-color tree coloring of the leftover forest T − J.
EdgeColoring odd_color_even_order(const Graph& g);

struct EdgeRemoval {
  Edge removed;
  Graph reduced;          // g − removed
  EdgeColoring coloring;  // of `reduced`, at most two classes
};

/// Connected Eulerian graph of odd order: an edge wu whose deletion leaves
/// a graph split into the odd factor F of g − w through u and the rest.
EdgeRemoval eulerian_edge_removal(const Graph& g);

/// 3-connected, odd order, at least two even-degree vertices.
EdgeColoring odd3_two_even(const Graph& g, SearchBudget budget = {});

/// Odd order, w the unique even-degree vertex, adjacent to every other
/// vertex, g − w connected. Returns nothing exactly when g is the wheel with
/// four spokes, which needs four colors.
std::optional<EdgeColoring> odd3_dominating_even(const Graph& g, Vertex w);

bool is_wheel_w4(const Graph& g);

/// Which construction produced a parity pair. "Attachments" are the
/// neighbors of w on the first cycle C.
enum class StarCase {
  OddAttachmentsOddCycle,
  OddAttachmentsEvenCycle,
  EvenAttachmentsOddCycle,
  NoAttachmentsOddCycleBridged,
  EvenAttachmentsEvenCycle,
  NoAttachmentsEvenCycle,
  SecondCycleOddBridged,
  SecondCycleEvenJoinedOnFirst,
  SecondCycleEvenJoinedOnSecond,
};

std::string_view to_string(StarCase c);
/// Parity class of the first cycle: 1 for odd attachments on an odd cycle,
/// 2 odd on even, 3 even on odd, 4 even on even.
int parity_class(StarCase c);

/// Two subgraphs of g − w (expressed in g) with covered counts of opposite
/// parity, each covering N(w), each component meeting N(w), and odd degree
/// exactly on N(w).
struct StarParityPair {
  EdgeSubgraph first;
  EdgeSubgraph second;
  StarCase which;
};

/// Separate verdicts for each requirement on a parity pair.
struct StarContract {
  bool avoids_center = false;
  bool parity_mismatch = false;
  bool covers_neighbors = false;
  bool components_meet_neighbors = false;
  bool odd_exactly_on_neighbors = false;

  bool holds() const {
    return avoids_center && parity_mismatch && covers_neighbors && components_meet_neighbors &&
           odd_exactly_on_neighbors;
  }
};

StarContract check_star_contract(const Graph& g, Vertex w, const EdgeSubgraph& first, const EdgeSubgraph& second);

/// Requires g 4-connected of odd order, w its unique even-degree vertex and
/// some vertex nonadjacent to w.
StarParityPair star_parity_subgraphs(const Graph& g, Vertex w, SearchBudget budget = {});

/// 4-connected graph of odd order. Provenance names the branch taken and,
/// for the parity-pair branch, the construction case.
EdgeColoring odd3_four_connected(const Graph& g, SearchBudget budget = {});

/// Routes to the most specific constructive method that applies and falls
/// back to exact search with four colors. Requires g connected with an edge.
EdgeColoring color_auto(const Graph& g, SearchBudget budget = {}, std::uint64_t exact_budget = kUnlimitedNodes);

}  // namespace oddcol
