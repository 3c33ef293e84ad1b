#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "oddcol/graph.hpp"

namespace oddcol {

/// Vertices that must end with odd degree. Kept sorted and duplicate-free.
class ParitySet {
 public:
  ParitySet() = default;
  explicit ParitySet(std::vector<Vertex> vertices);
  ParitySet(std::initializer_list<Vertex> vertices) : ParitySet(std::vector<Vertex>(vertices)) {}

  /// Every vertex of g.
  static ParitySet all(const Graph& g);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(Vertex v) const;

  /// Set symmetric difference with {v}.
  ParitySet toggled(Vertex v) const;

  bool operator==(const ParitySet&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

/// The unique J ⊆ t with odd degree exactly on s. An edge of t is kept iff
/// the side below it (t rooted per component at its lowest vertex) holds an
/// odd number of s-vertices; one post-order pass.
///
/// `t` may be a forest, as long as each tree holds an even number of
/// s-vertices. Throws PreconditionError when t has a cycle, |s| is odd, or
/// some s-vertex is not covered by t.
EdgeSubgraph tree_t_join(const EdgeSubgraph& t, const ParitySet& s);

/// Spanning F with deg_F odd exactly on s; each nontrivial component of F
/// meets s. Realized as the T-join of s inside the breadth-first tree.
EdgeSubgraph spanning_parity_subgraph(const Graph& g, const ParitySet& s);

/// Spanning subgraph in which every vertex has odd degree.
EdgeSubgraph odd_factor(const Graph& g);

/// Odd factor F containing every edge at `w` whose complement is a forest.
///
/// With T a spanning tree of g − w, start from F0 = E(w) ∪ (E(g − w) − T)
/// and repair the parities inside T; the complement T − J is a forest.
/// Requires g connected of even order, deg(w) odd and g − w connected.
EdgeSubgraph odd_factor_through_vertex(const Graph& g, Vertex w);

/// Splits E(g) into H1, H2 such that every covered vertex other than w has
/// odd degree in each class covering it. Requires g − w to be a forest.
///
/// w is exploded into one fresh leaf per incident edge; the resulting forest
/// is odd 2-colored and the colors are pulled back.
std::pair<EdgeSubgraph, EdgeSubgraph> forest_split_decomposition(const Graph& g, Vertex w);

}  // namespace oddcol
