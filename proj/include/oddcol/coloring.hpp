#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddcol/graph.hpp"

namespace oddcol {

/// Total map from edges to colors 1..k. Validity is checked by
/// verify_coloring, never assumed.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  /// Throws PreconditionError on repeated edges or colors below 1.
  explicit EdgeColoring(std::vector<std::pair<Edge, int>> assignment, std::string provenance = {});

  /// One color per nonempty class, in the order given. The classes must be
  /// pairwise disjoint and cover exactly E(g).
  static EdgeColoring from_classes(const Graph& g, std::span<const EdgeSubgraph> classes, std::string provenance = {});

  /// Largest color in use (0 for an empty coloring).
  int class_count() const { return class_count_; }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> colors() const { return colors_; }
  std::optional<int> color_of(Edge e) const;
  /// Class `c` (1-based) as an edge set in a vertex space of the given size.
  EdgeSubgraph color_class(const Graph& g, int c) const;

  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  bool operator==(const EdgeColoring& o) const { return edges_ == o.edges_ && colors_ == o.colors_; }

 private:
  std::vector<Edge> edges_;
  std::vector<int> colors_;
  int class_count_ = 0;
  std::string provenance_;
};

struct Violation {
  Vertex vertex;
  int color;
  int degree;
  bool operator==(const Violation&) const = default;
};

struct VerifyReport {
  bool valid = true;
  std::optional<Violation> violation;  // first offender, by vertex then color
  explicit operator bool() const { return valid; }
};

/// Every covered vertex of every nonempty class must have odd degree there.
/// Throws PartialColoringError unless the coloring covers exactly E(g).
VerifyReport verify_coloring(const Graph& g, const EdgeColoring& coloring);

/// Odd coloring of a forest with at most two classes.
///
/// Each component is rooted at its lowest-index leaf and its root edge gets
/// color 1. Going down, a vertex whose parent edge has color c and which has
/// m child edges gives them all color c when m is even and the other color
/// when m is odd; either way both class degrees at the vertex are 0 or odd.
EdgeColoring odd_color_tree(const Graph& forest);

inline constexpr std::uint64_t kUnlimitedNodes = std::numeric_limits<std::uint64_t>::max();

struct ExactResult {
  std::optional<int> index;  // nothing when the index exceeds k_max
  EdgeColoring witness;
  std::uint64_t nodes = 0;
};

/// Smallest k <= k_max admitting an odd k-edge-coloring, by backtracking.
/// Edgeless graphs report 0. Throws BudgetExceeded after `node_budget`
/// search nodes.
ExactResult exact_odd_chromatic_index(const Graph& g, int k_max, std::uint64_t node_budget = kUnlimitedNodes);

/// Decision version: an odd coloring with at most k classes, if any.
std::optional<EdgeColoring> find_odd_coloring(const Graph& g, int k, std::uint64_t node_budget = kUnlimitedNodes,
                                              std::uint64_t* nodes_used = nullptr);

}  // namespace oddcol
