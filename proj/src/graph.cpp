#include "oddcol/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "flow.hpp"
#include "oddcol/error.hpp"

namespace oddcol {

namespace {

std::string edge_text(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  adjacency_.resize(idx(vertex_count));
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  edges_.assign(edges.begin(), edges.end());
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge e = edges_[i];
    if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= vertex_count) throw PreconditionError("edge " + edge_text(e) + " out of range");
    if (i > 0 && edges_[i - 1] == e) throw PreconditionError("repeated edge " + edge_text(e));
    adjacency_[idx(e.u)].push_back(e.v);
    adjacency_[idx(e.v)].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph::Graph(int vertex_count, std::initializer_list<Edge> edges)
    : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::require_vertex(Vertex v) const {
  if (!is_vertex(v)) throw PreconditionError("invalid vertex " + std::to_string(v));
}

int Graph::degree(Vertex v) const {
  require_vertex(v);
  return static_cast<int>(adjacency_[idx(v)].size());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  require_vertex(v);
  return adjacency_[idx(v)];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!is_vertex(a) || !is_vertex(b) || a == b) return false;
  const auto& list = adjacency_[idx(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

// ---------------------------------------------------------------------------

EdgeSubgraph::EdgeSubgraph(const Graph& parent, std::vector<Edge> edges) : vertex_space_(parent.vertex_count()) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge e : edges) {
    if (!parent.has_edge(e)) throw PreconditionError("edge " + edge_text(e) + " is not in the parent graph");
  }
  edges_ = std::move(edges);
}

EdgeSubgraph EdgeSubgraph::whole(const Graph& g) {
  return EdgeSubgraph(g.vertex_count(), {g.edges().begin(), g.edges().end()}, true);
}

EdgeSubgraph EdgeSubgraph::star(const Graph& g, Vertex v) {
  std::vector<Edge> out;
  for (Vertex x : g.neighbors(v)) out.emplace_back(v, x);
  std::sort(out.begin(), out.end());
  return EdgeSubgraph(g.vertex_count(), std::move(out), true);
}

bool EdgeSubgraph::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

int EdgeSubgraph::degree(Vertex v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](Edge e) { return e.touches(v); }));
}

std::vector<int> EdgeSubgraph::degrees() const {
  std::vector<int> d(idx(vertex_space_), 0);
  for (const Edge e : edges_) {
    ++d[idx(e.u)];
    ++d[idx(e.v)];
  }
  return d;
}

std::vector<Vertex> EdgeSubgraph::covered_vertices() const {
  const auto d = degrees();
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_space_; ++v) {
    if (d[idx(v)] > 0) out.push_back(v);
  }
  return out;
}

bool EdgeSubgraph::is_subgraph_of(const Graph& g) const {
  return vertex_space_ == g.vertex_count() &&
         std::all_of(edges_.begin(), edges_.end(), [&g](Edge e) { return g.has_edge(e); });
}

Graph EdgeSubgraph::as_graph() const { return Graph(vertex_space_, edges_); }

namespace {

void require_same_space(const EdgeSubgraph& a, const EdgeSubgraph& b) {
  if (a.vertex_space() != b.vertex_space()) {
    throw PreconditionError("edge subgraphs live in different vertex spaces (" + std::to_string(a.vertex_space()) +
                            " vs " + std::to_string(b.vertex_space()) + ")");
  }
}

}  // namespace

EdgeSubgraph unite(const EdgeSubgraph& a, const EdgeSubgraph& b) {
  require_same_space(a, b);
  std::vector<Edge> out;
  std::set_union(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(), std::back_inserter(out));
  return EdgeSubgraph(a.vertex_space_, std::move(out), true);
}

EdgeSubgraph subtract(const EdgeSubgraph& a, const EdgeSubgraph& b) {
  require_same_space(a, b);
  std::vector<Edge> out;
  std::set_difference(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(), std::back_inserter(out));
  return EdgeSubgraph(a.vertex_space_, std::move(out), true);
}

EdgeSubgraph intersect(const EdgeSubgraph& a, const EdgeSubgraph& b) {
  require_same_space(a, b);
  std::vector<Edge> out;
  std::set_intersection(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(), std::back_inserter(out));
  return EdgeSubgraph(a.vertex_space_, std::move(out), true);
}

EdgeSubgraph symmetric_difference(const EdgeSubgraph& a, const EdgeSubgraph& b) {
  require_same_space(a, b);
  std::vector<Edge> out;
  std::set_symmetric_difference(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(),
                                std::back_inserter(out));
  return EdgeSubgraph(a.vertex_space_, std::move(out), true);
}

std::vector<EdgeSubgraph> edge_components(const EdgeSubgraph& s) {
  const Graph g = s.as_graph();
  const auto labels = component_labels(g);
  std::vector<int> slot(labels.size(), -1);
  std::vector<std::vector<Edge>> groups;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    auto& sl = slot[idx(labels[idx(v)])];
    if (sl < 0) {
      sl = static_cast<int>(groups.size());
      groups.emplace_back();
    }
  }
  for (const Edge e : s.edges()) groups[idx(slot[idx(labels[idx(e.u)])])].push_back(e);
  std::vector<EdgeSubgraph> out;
  out.reserve(groups.size());
  for (auto& edges : groups) out.emplace_back(g, std::move(edges));
  return out;
}

// ---------------------------------------------------------------------------

EdgeSubgraph Relabeled::lift(const EdgeSubgraph& s, const Graph& parent) const {
  std::vector<Edge> out;
  out.reserve(s.size());
  for (const Edge e : s.edges()) out.push_back(lift(e));
  return EdgeSubgraph(parent, std::move(out));
}

Relabeled remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  Relabeled r;
  r.from_parent.assign(idx(g.vertex_count()), 0);
  for (Vertex v : removed) {
    if (!g.is_vertex(v)) throw PreconditionError("invalid vertex " + std::to_string(v));
    r.from_parent[idx(v)] = -1;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (r.from_parent[idx(v)] == -1) continue;
    r.from_parent[idx(v)] = static_cast<Vertex>(r.to_parent.size());
    r.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge e : g.edges()) {
    const Vertex a = r.from_parent[idx(e.u)];
    const Vertex b = r.from_parent[idx(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  r.graph = Graph(static_cast<int>(r.to_parent.size()), edges);
  return r;
}

Relabeled compact(const EdgeSubgraph& s) {
  Relabeled r;
  r.from_parent.assign(idx(s.vertex_space()), -1);
  for (Vertex v : s.covered_vertices()) {
    r.from_parent[idx(v)] = static_cast<Vertex>(r.to_parent.size());
    r.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  edges.reserve(s.size());
  for (const Edge e : s.edges()) edges.emplace_back(r.from_parent[idx(e.u)], r.from_parent[idx(e.v)]);
  r.graph = Graph(static_cast<int>(r.to_parent.size()), edges);
  return r;
}

Graph remove_edges(const Graph& g, const EdgeSubgraph& s) {
  std::vector<Edge> keep;
  for (const Edge e : g.edges()) {
    if (!s.contains(e)) keep.push_back(e);
  }
  return Graph(g.vertex_count(), keep);
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(idx(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) d[idx(v)] = g.degree(v);
  return d;
}

std::vector<Vertex> even_degree_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 == 0) out.push_back(v);
  }
  return out;
}

int min_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = v == 0 ? g.degree(v) : std::min(best, g.degree(v));
  return best;
}

namespace {

// Labels the vertices reachable from each unlabeled root; `skip` vertices get -1.
std::vector<int> label_components(const Graph& g, const std::vector<char>& skip) {
  std::vector<int> label(idx(g.vertex_count()), -1);
  int next = 0;
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (skip[idx(root)] || label[idx(root)] >= 0) continue;
    label[idx(root)] = next;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (skip[idx(y)] || label[idx(y)] >= 0) continue;
        label[idx(y)] = next;
        queue.push_back(y);
      }
    }
    ++next;
  }
  return label;
}

}  // namespace

std::vector<int> component_labels(const Graph& g) {
  return label_components(g, std::vector<char>(idx(g.vertex_count()), 0));
}

bool is_connected(const Graph& g) {
  const auto labels = component_labels(g);
  return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
}

bool is_connected_without(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> skip(idx(g.vertex_count()), 0);
  for (Vertex v : removed) {
    if (!g.is_vertex(v)) throw PreconditionError("invalid vertex " + std::to_string(v));
    skip[idx(v)] = 1;
  }
  const auto labels = label_components(g, skip);
  return std::all_of(labels.begin(), labels.end(), [](int l) { return l <= 0; });
}

bool is_acyclic(const Graph& g) {
  const auto labels = component_labels(g);
  const int components = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  return static_cast<int>(g.edge_count()) == g.vertex_count() - components;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && is_connected(g) && static_cast<int>(g.edge_count()) == g.vertex_count() - 1;
}

bool is_eulerian(const Graph& g) {
  if (!is_connected(g)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return true;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(idx(g.vertex_count()), -1);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (side[idx(root)] >= 0) continue;
    side[idx(root)] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (side[idx(y)] < 0) {
          side[idx(y)] = 1 - side[idx(x)];
          queue.push_back(y);
        } else if (side[idx(y)] == side[idx(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

// ---------------------------------------------------------------------------

namespace {

struct PathNetwork {
  detail::FlowNetwork net;
  int source;
  int sink;
};

// Vertex v is split into in(v) = 2v and out(v) = 2v + 1.
PathNetwork build_path_network(const Graph& g, std::span<const Vertex> sources, std::span<const Vertex> sinks,
                               int k, PathTerminals terminals) {
  const int n = g.vertex_count();
  std::vector<char> is_source(idx(n), 0), is_sink(idx(n), 0);
  for (Vertex s : sources) is_source[idx(s)] = 1;
  for (Vertex t : sinks) is_sink[idx(t)] = 1;

  PathNetwork p{detail::FlowNetwork(2 * n + 2), 2 * n, 2 * n + 1};
  for (Vertex v = 0; v < n; ++v) {
    const bool shared = (is_source[idx(v)] && terminals.share_sources) || (is_sink[idx(v)] && terminals.share_sinks);
    p.net.add_arc(2 * v, 2 * v + 1, shared ? k : 1);
  }
  for (Vertex s : sources) p.net.add_arc(p.source, 2 * s, detail::FlowNetwork::kInfinite);
  for (Vertex a = 0; a < n; ++a) {
    if (is_sink[idx(a)]) continue;
    for (Vertex b : g.neighbors(a)) {
      if (!is_source[idx(b)]) p.net.add_arc(2 * a + 1, 2 * b, 1);
    }
  }
  for (Vertex t : sinks) p.net.add_arc(2 * t + 1, p.sink, detail::FlowNetwork::kInfinite);
  return p;
}

void check_terminal_sets(const Graph& g, std::span<const Vertex> sources, std::span<const Vertex> sinks) {
  if (sources.empty() || sinks.empty()) throw PreconditionError("disjoint_paths needs nonempty sources and sinks");
  std::vector<char> seen(idx(g.vertex_count()), 0);
  for (Vertex s : sources) {
    if (!g.is_vertex(s)) throw PreconditionError("invalid source " + std::to_string(s));
    seen[idx(s)] = 1;
  }
  for (Vertex t : sinks) {
    if (!g.is_vertex(t)) throw PreconditionError("invalid sink " + std::to_string(t));
    if (seen[idx(t)]) throw PreconditionError("vertex " + std::to_string(t) + " is both a source and a sink");
  }
}

}  // namespace

std::optional<std::vector<std::vector<Vertex>>> disjoint_paths(const Graph& g, std::span<const Vertex> sources,
                                                               std::span<const Vertex> sinks, int k,
                                                               PathTerminals terminals) {
  if (k < 1) throw PreconditionError("disjoint_paths needs k >= 1");
  check_terminal_sets(g, sources, sinks);
  auto p = build_path_network(g, sources, sinks, k, terminals);
  if (p.net.max_flow(p.source, p.sink, k) < k) return std::nullopt;

  const int split_nodes = 2 * g.vertex_count();
  std::vector<std::vector<Vertex>> paths;
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> path;
    int node = p.source;
    while (node != p.sink) {
      int next_arc = -1;
      for (int id : p.net.arcs_from(node)) {
        if (p.net.is_forward(id) && p.net.flow(id) > 0) {
          next_arc = id;
          break;
        }
      }
      if (next_arc < 0) throw InternalFault("flow decomposition lost a unit");
      p.net.take(next_arc);
      node = p.net.head(next_arc);
      if (node < split_nodes && node % 2 == 0) path.push_back(node / 2);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

namespace {

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  const Vertex src[1] = {s};
  const Vertex dst[1] = {t};
  auto p = build_path_network(g, src, dst, limit, {});
  return p.net.max_flow(p.source, p.sink, limit);
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  const int n = g.vertex_count();
  if (n < k + 1 || !is_connected(g)) return false;
  if (k == 1) return true;
  for (Vertex s = 0; s < n; ++s) {
    if (g.degree(s) < k) return false;
  }
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      if (local_connectivity(g, s, t, k) < k) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void bfs_tree_from(const Graph& g, Vertex root, std::vector<char>& seen, std::vector<Edge>& out) {
  std::deque<Vertex> queue{root};
  seen[idx(root)] = 1;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (seen[idx(y)]) continue;
      seen[idx(y)] = 1;
      out.emplace_back(x, y);
      queue.push_back(y);
    }
  }
}

}  // namespace

EdgeSubgraph spanning_tree(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("spanning_tree needs a connected graph");
  std::vector<Edge> out;
  if (g.vertex_count() > 0) {
    std::vector<char> seen(idx(g.vertex_count()), 0);
    bfs_tree_from(g, 0, seen, out);
  }
  return EdgeSubgraph(g, std::move(out));
}

EdgeSubgraph spanning_forest(const Graph& g) {
  std::vector<Edge> out;
  std::vector<char> seen(idx(g.vertex_count()), 0);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (!seen[idx(root)]) bfs_tree_from(g, root, seen, out);
  }
  return EdgeSubgraph(g, std::move(out));
}

std::vector<Vertex> forest_path(const EdgeSubgraph& forest, Vertex from, Vertex to) {
  const Graph g = forest.as_graph();
  std::vector<Vertex> parent(idx(g.vertex_count()), -1);
  std::deque<Vertex> queue{from};
  parent[idx(from)] = from;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (Vertex y : g.neighbors(x)) {
      if (parent[idx(y)] >= 0) continue;
      parent[idx(y)] = x;
      queue.push_back(y);
    }
  }
  if (parent[idx(to)] < 0) return {};
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[idx(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace oddcol
