#include "oddcol/parity.hpp"

#include <algorithm>
#include <string>

#include "oddcol/coloring.hpp"
#include "oddcol/error.hpp"

namespace oddcol {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

ParitySet::ParitySet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

ParitySet ParitySet::all(const Graph& g) {
  std::vector<Vertex> v(idx(g.vertex_count()));
  for (Vertex i = 0; i < g.vertex_count(); ++i) v[idx(i)] = i;
  return ParitySet(std::move(v));
}

bool ParitySet::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

ParitySet ParitySet::toggled(Vertex v) const {
  std::vector<Vertex> out = vertices_;
  const auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it != out.end() && *it == v) {
    out.erase(it);
  } else {
    out.insert(it, v);
  }
  return ParitySet(std::move(out));
}

EdgeSubgraph tree_t_join(const EdgeSubgraph& t, const ParitySet& s) {
  if (s.size() % 2 != 0) throw PreconditionError("parity set has odd size " + std::to_string(s.size()));
  const Graph tree = t.as_graph();
  if (!is_acyclic(tree)) throw PreconditionError("tree_t_join needs an acyclic edge set");
  const int n = tree.vertex_count();
  std::vector<char> odd(idx(n), 0);
  for (Vertex v : s.vertices()) {
    if (!tree.is_vertex(v)) throw PreconditionError("parity vertex " + std::to_string(v) + " out of range");
    if (tree.degree(v) == 0) throw PreconditionError("parity vertex " + std::to_string(v) + " is not covered");
    odd[idx(v)] = 1;
  }

  std::vector<Vertex> parent(idx(n), -1);
  std::vector<char> seen(idx(n), 0);
  std::vector<Vertex> order;
  std::vector<Edge> join;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[idx(root)] || tree.degree(root) == 0) continue;
    // depth-first preorder; reversing it gives children before parents
    order.clear();
    std::vector<Vertex> stack{root};
    seen[idx(root)] = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (Vertex y : tree.neighbors(x)) {
        if (seen[idx(y)]) continue;
        seen[idx(y)] = 1;
        parent[idx(y)] = x;
        stack.push_back(y);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex x = *it;
      if (x == root) {
        if (odd[idx(x)]) throw PreconditionError("a tree component holds an odd number of parity vertices");
        continue;
      }
      if (odd[idx(x)]) {
        join.emplace_back(x, parent[idx(x)]);
        odd[idx(parent[idx(x)])] ^= 1;
      }
    }
  }
  return EdgeSubgraph(tree, std::move(join));
}

EdgeSubgraph spanning_parity_subgraph(const Graph& g, const ParitySet& s) {
  if (!is_connected(g)) throw PreconditionError("spanning_parity_subgraph needs a connected graph");
  if (s.size() % 2 != 0) throw PreconditionError("parity set has odd size " + std::to_string(s.size()));
  return tree_t_join(spanning_tree(g), s);
}

EdgeSubgraph odd_factor(const Graph& g) {
  if (g.vertex_count() % 2 != 0) throw PreconditionError("odd_factor needs even order");
  if (!is_connected(g)) throw PreconditionError("odd_factor needs a connected graph");
  return spanning_parity_subgraph(g, ParitySet::all(g));
}

EdgeSubgraph odd_factor_through_vertex(const Graph& g, Vertex w) {
  if (!g.is_vertex(w)) throw PreconditionError("invalid vertex " + std::to_string(w));
  if (g.vertex_count() % 2 != 0) throw PreconditionError("odd_factor_through_vertex needs even order");
  if (!is_connected(g)) throw PreconditionError("odd_factor_through_vertex needs a connected graph");
  if (g.degree(w) % 2 == 0) throw PreconditionError("vertex " + std::to_string(w) + " has even degree");
  const Vertex removed[1] = {w};
  const Relabeled rest = remove_vertices(g, removed);
  if (!is_connected(rest.graph)) throw PreconditionError("g - w is disconnected");

  const EdgeSubgraph tree = rest.lift(spanning_tree(rest.graph), g);
  // T avoids w, so E(g) − T = E(w) ∪ (E(g − w) − T)
  const EdgeSubgraph base = subtract(EdgeSubgraph::whole(g), tree);
  const auto d = base.degrees();
  std::vector<Vertex> fix;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != w && d[idx(v)] % 2 == 0) fix.push_back(v);
  }
  return unite(base, tree_t_join(tree, ParitySet(std::move(fix))));
}

std::pair<EdgeSubgraph, EdgeSubgraph> forest_split_decomposition(const Graph& g, Vertex w) {
  if (!g.is_vertex(w)) throw PreconditionError("invalid vertex " + std::to_string(w));
  const Vertex removed[1] = {w};
  if (!is_acyclic(remove_vertices(g, removed).graph)) throw PreconditionError("g - w is not a forest");

  // fresh leaf n + i replaces w on its i-th incident edge
  const int n = g.vertex_count();
  const auto around = g.neighbors(w);
  std::vector<Edge> exploded;
  for (const Edge e : g.edges()) {
    if (e.touches(w)) continue;
    exploded.push_back(e);
  }
  for (std::size_t i = 0; i < around.size(); ++i) exploded.emplace_back(n + static_cast<Vertex>(i), around[i]);
  const Graph forest(n + static_cast<int>(around.size()), exploded);
  const EdgeColoring colors = odd_color_tree(forest);

  std::vector<Edge> first, second;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    Edge e = colors.edges()[i];
    if (e.v >= n) e = Edge{w, e.u};
    (colors.colors()[i] == 1 ? first : second).push_back(e);
  }
  return {EdgeSubgraph(g, std::move(first)), EdgeSubgraph(g, std::move(second))};
}

}  // namespace oddcol
