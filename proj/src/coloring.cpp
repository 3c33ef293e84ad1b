#include "oddcol/coloring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "oddcol/error.hpp"

namespace oddcol {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::string edge_text(Edge e) { return std::to_string(e.u) + " " + std::to_string(e.v); }

}  // namespace

EdgeColoring::EdgeColoring(std::vector<std::pair<Edge, int>> assignment, std::string provenance)
    : provenance_(std::move(provenance)) {
  std::sort(assignment.begin(), assignment.end());
  edges_.reserve(assignment.size());
  colors_.reserve(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const auto& [e, c] = assignment[i];
    if (c < 1) throw PreconditionError("edge " + edge_text(e) + " has color " + std::to_string(c));
    if (i > 0 && assignment[i - 1].first == e) throw PreconditionError("edge " + edge_text(e) + " colored twice");
    edges_.push_back(e);
    colors_.push_back(c);
    class_count_ = std::max(class_count_, c);
  }
}

EdgeColoring EdgeColoring::from_classes(const Graph& g, std::span<const EdgeSubgraph> classes,
                                        std::string provenance) {
  std::vector<std::pair<Edge, int>> assignment;
  int color = 0;
  for (const auto& cls : classes) {
    if (cls.empty()) continue;
    ++color;
    for (const Edge e : cls.edges()) assignment.emplace_back(e, color);
  }
  EdgeColoring out(std::move(assignment), std::move(provenance));
  if (!std::equal(out.edges_.begin(), out.edges_.end(), g.edges().begin(), g.edges().end())) {
    throw InternalFault("color classes do not partition the edge set");
  }
  return out;
}

std::optional<int> EdgeColoring::color_of(Edge e) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return colors_[static_cast<std::size_t>(it - edges_.begin())];
}

EdgeSubgraph EdgeColoring::color_class(const Graph& g, int c) const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (colors_[i] == c) out.push_back(edges_[i]);
  }
  return EdgeSubgraph(g, std::move(out));
}

VerifyReport verify_coloring(const Graph& g, const EdgeColoring& coloring) {
  const auto edges = coloring.edges();
  for (const Edge e : edges) {
    if (!g.has_edge(e)) throw PartialColoringError("colored pair " + edge_text(e) + " is not an edge of the graph");
  }
  if (edges.size() != g.edge_count()) {
    for (const Edge e : g.edges()) {
      if (!coloring.color_of(e)) throw PartialColoringError("edge " + edge_text(e) + " is uncolored");
    }
  }

  const int k = coloring.class_count();
  std::vector<int> deg(idx(g.vertex_count()) * static_cast<std::size_t>(k + 1), 0);
  auto at = [k](Vertex v, int c) { return idx(v) * static_cast<std::size_t>(k + 1) + static_cast<std::size_t>(c); };
  const auto colors = coloring.colors();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    ++deg[at(edges[i].u, colors[i])];
    ++deg[at(edges[i].v, colors[i])];
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int c = 1; c <= k; ++c) {
      const int d = deg[at(v, c)];
      if (d > 0 && d % 2 == 0) return {false, Violation{v, c, d}};
    }
  }
  return {};
}

EdgeColoring odd_color_tree(const Graph& forest) {
  if (!is_acyclic(forest)) throw PreconditionError("odd_color_tree needs an acyclic graph");
  const int n = forest.vertex_count();
  std::vector<char> seen(idx(n), 0);
  std::vector<std::pair<Edge, int>> assignment;
  assignment.reserve(forest.edge_count());

  // parent color per vertex; the root's "parent edge" is virtual
  std::vector<int> parent_color(idx(n), 0);
  std::vector<Vertex> parent(idx(n), -1);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[idx(root)] || forest.degree(root) != 1) continue;
    // lowest-index leaf of this component: any lower vertex of the
    // component would already have been seen
    const Vertex child = forest.neighbors(root)[0];
    seen[idx(root)] = 1;
    assignment.emplace_back(Edge{root, child}, 1);
    parent[idx(child)] = root;
    parent_color[idx(child)] = 1;
    seen[idx(child)] = 1;
    std::deque<Vertex> queue{child};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      const int m = forest.degree(x) - 1;
      const int c = parent_color[idx(x)];
      const int child_color = m % 2 == 0 ? c : 3 - c;
      for (Vertex y : forest.neighbors(x)) {
        if (y == parent[idx(x)]) continue;
        assignment.emplace_back(Edge{x, y}, child_color);
        parent[idx(y)] = x;
        parent_color[idx(y)] = child_color;
        seen[idx(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  return EdgeColoring(std::move(assignment), "tree");
}

// ---------------------------------------------------------------------------

namespace {

// Backtracking over edge colors with parity feasibility pruning.
//
// Edges are ordered by a maximum-cardinality vertex order so vertices
// saturate early. After each assignment both endpoints are checked: with r
// uncolored incident edges left, every class with even positive degree needs
// an odd number of them, every empty class takes zero or an odd number, and
// any surplus must be even and land in a class that ends nonempty.
class OddColoringSearch {
 public:
  OddColoringSearch(const Graph& g, int k, std::uint64_t budget) : g_(g), k_(k), budget_(budget) {
    order_edges();
    const std::size_t n = idx(g.vertex_count());
    deg_.assign(n * static_cast<std::size_t>(k_ + 1), 0);
    remaining_.resize(n);
    for (Vertex v = 0; v < g.vertex_count(); ++v) remaining_[idx(v)] = g.degree(v);
    color_.assign(order_.size(), 0);
  }

  bool run() { return assign(0, 0); }
  std::uint64_t nodes() const { return nodes_; }

  EdgeColoring witness() const {
    std::vector<std::pair<Edge, int>> a;
    for (std::size_t i = 0; i < order_.size(); ++i) a.emplace_back(order_[i], color_[i]);
    return EdgeColoring(std::move(a), "exact search");
  }

 private:
  void order_edges() {
    const int n = g_.vertex_count();
    std::vector<int> weight(idx(n), 0);
    std::vector<char> placed(idx(n), 0);
    std::vector<int> position(idx(n), -1);
    for (int step = 0; step < n; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[idx(v)]) continue;
        if (best < 0 || weight[idx(v)] > weight[idx(best)] ||
            (weight[idx(v)] == weight[idx(best)] && g_.degree(v) > g_.degree(best))) {
          best = v;
        }
      }
      placed[idx(best)] = 1;
      position[idx(best)] = step;
      std::vector<Vertex> back;
      for (Vertex y : g_.neighbors(best)) {
        if (placed[idx(y)] && y != best) back.push_back(y);
        ++weight[idx(y)];
      }
      std::sort(back.begin(), back.end(), [&](Vertex a, Vertex b) { return position[idx(a)] < position[idx(b)]; });
      for (Vertex y : back) order_.emplace_back(best, y);
    }
  }

  int& deg(Vertex v, int c) { return deg_[idx(v) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(c)]; }

  bool feasible(Vertex v) {
    int even_positive = 0, odd = 0, empty = 0;
    for (int c = 1; c <= k_; ++c) {
      const int d = deg(v, c);
      if (d == 0) {
        ++empty;
      } else if (d % 2 == 0) {
        ++even_positive;
      } else {
        ++odd;
      }
    }
    const int r = remaining_[idx(v)];
    for (int j = 0; j <= empty && even_positive + j <= r; ++j) {
      const int surplus = r - even_positive - j;
      if (surplus % 2 != 0) continue;
      if (surplus == 0 || even_positive + j + odd > 0) return true;
    }
    return false;
  }

  bool assign(std::size_t i, int used) {
    if (i == order_.size()) return true;
    if (++nodes_ > budget_) throw BudgetExceeded("exact search exceeded its node budget");
    const Edge e = order_[i];
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      ++deg(e.u, c);
      ++deg(e.v, c);
      --remaining_[idx(e.u)];
      --remaining_[idx(e.v)];
      color_[i] = c;
      if (feasible(e.u) && feasible(e.v) && assign(i + 1, std::max(used, c))) return true;
      --deg(e.u, c);
      --deg(e.v, c);
      ++remaining_[idx(e.u)];
      ++remaining_[idx(e.v)];
    }
    color_[i] = 0;
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Edge> order_;
  std::vector<int> color_;
  std::vector<int> deg_;
  std::vector<int> remaining_;
};

}  // namespace

std::optional<EdgeColoring> find_odd_coloring(const Graph& g, int k, std::uint64_t node_budget,
                                              std::uint64_t* nodes_used) {
  if (k < 0) throw PreconditionError("k must be nonnegative");
  if (g.edge_count() == 0) return EdgeColoring({}, "exact search");
  if (k == 0) return std::nullopt;
  OddColoringSearch search(g, k, node_budget);
  bool found = false;
  try {
    found = search.run();
  } catch (const BudgetExceeded&) {
    if (nodes_used) *nodes_used += search.nodes();
    throw;
  }
  if (nodes_used) *nodes_used += search.nodes();
  if (!found) return std::nullopt;
  return search.witness();
}

ExactResult exact_odd_chromatic_index(const Graph& g, int k_max, std::uint64_t node_budget) {
  if (k_max < 1) throw PreconditionError("k_max must be positive");
  ExactResult result;
  if (g.edge_count() == 0) {
    result.index = 0;
    result.witness = EdgeColoring({}, "exact search");
    return result;
  }
  for (int k = 1; k <= k_max; ++k) {
    const std::uint64_t left = node_budget == kUnlimitedNodes ? kUnlimitedNodes : node_budget - result.nodes;
    auto found = find_odd_coloring(g, k, left, &result.nodes);
    if (found) {
      result.index = found->class_count();
      result.witness = std::move(*found);
      return result;
    }
  }
  return result;
}

}  // namespace oddcol
