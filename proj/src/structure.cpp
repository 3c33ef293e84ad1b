#include "oddcol/structure.hpp"

#include <algorithm>
#include <string>

#include "oddcol/error.hpp"

namespace oddcol {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Depth-first growth of induced paths. `touch[x]` counts path vertices
// (other than an optional anchor) adjacent to x, so an extension x of the
// last vertex keeps the path chordless iff touch[x] == 1.
class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, SearchBudget budget, Vertex anchor)
      : g_(g), budget_(budget), anchor_(anchor), on_path_(idx(g.vertex_count()), 0),
        touch_(idx(g.vertex_count()), 0) {}

  void push(Vertex x) {
    path_.push_back(x);
    on_path_[idx(x)] = 1;
    if (x == anchor_) return;
    for (Vertex y : g_.neighbors(x)) ++touch_[idx(y)];
  }

  void pop() {
    const Vertex x = path_.back();
    path_.pop_back();
    on_path_[idx(x)] = 0;
    if (x == anchor_) return;
    for (Vertex y : g_.neighbors(x)) --touch_[idx(y)];
  }

  // Whether x can follow the current last vertex without a chord.
  bool extendable(Vertex x) const { return !on_path_[idx(x)] && touch_[idx(x)] == 1; }

  void tick() {
    if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("structure search exceeded its node budget");
  }

  bool remainder_connected_with(Vertex extra) const {
    std::vector<Vertex> removed = path_;
    if (extra >= 0) removed.push_back(extra);
    return is_connected_without(g_, removed);
  }

  const std::vector<Vertex>& path() const { return path_; }
  Vertex last() const { return path_.back(); }

 private:
  const Graph& g_;
  SearchBudget budget_;
  Vertex anchor_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> path_;
  std::vector<char> on_path_;
  std::vector<int> touch_;
};

void require_three_connected(const Graph& g, const char* op) {
  if (!is_k_connected(g, 3)) throw PreconditionError(std::string(op) + " needs a 3-connected graph");
}

}  // namespace

std::size_t CyclePath::edge_count() const {
  if (vertices.size() < 2) return 0;
  return closed ? vertices.size() : vertices.size() - 1;
}

std::vector<Edge> CyclePath::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
  if (closed && vertices.size() >= 3) out.emplace_back(vertices.back(), vertices.front());
  return out;
}

bool CyclePath::contains(Vertex v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

bool is_valid_in(const Graph& g, const CyclePath& c) {
  if (c.vertices.empty() || (c.closed && c.vertices.size() < 3)) return false;
  std::vector<char> seen(idx(g.vertex_count()), 0);
  for (Vertex v : c.vertices) {
    if (!g.is_vertex(v) || seen[idx(v)]) return false;
    seen[idx(v)] = 1;
  }
  for (const Edge e : c.edges()) {
    if (!g.has_edge(e)) return false;
  }
  return true;
}

bool is_chordless(const Graph& g, const CyclePath& c) {
  const auto own = c.edges();
  const auto& vs = c.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Edge e{vs[i], vs[j]};
      if (g.has_edge(e) && std::find(own.begin(), own.end(), e) == own.end()) return false;
    }
  }
  return true;
}

EdgeSubgraph as_subgraph(const Graph& g, const CyclePath& c) { return EdgeSubgraph(g, c.edges()); }

// ---------------------------------------------------------------------------

namespace {

bool grow_cycle(const Graph& g, InducedPathSearch& s, Vertex anchor, Vertex avoid, CyclePath& out) {
  const Vertex last = s.last();
  for (Vertex x : g.neighbors(last)) {
    if (x == avoid || x == anchor || !s.extendable(x)) continue;
    s.tick();
    if (g.has_edge(anchor, x)) {
      // closes the cycle; any longer walk through x would leave the chord x-anchor
      if (s.remainder_connected_with(x)) {
        out.vertices = s.path();
        out.vertices.push_back(x);
        out.closed = true;
        return true;
      }
      continue;
    }
    s.push(x);
    if (grow_cycle(g, s, anchor, avoid, out)) return true;
    s.pop();
  }
  return false;
}

}  // namespace

CyclePath nonseparating_chordless_cycle(const Graph& g, Edge e, Vertex avoid, SearchBudget budget) {
  if (!g.has_edge(e)) throw PreconditionError("nonseparating_chordless_cycle: e is not an edge");
  if (!g.is_vertex(avoid) || e.touches(avoid)) {
    throw PreconditionError("nonseparating_chordless_cycle: the avoided vertex must be a vertex off e");
  }
  require_three_connected(g, "nonseparating_chordless_cycle");
  InducedPathSearch s(g, budget, e.u);
  s.push(e.u);
  s.push(e.v);
  CyclePath out;
  if (!grow_cycle(g, s, e.u, avoid, out)) {
    throw InternalFault("no nonseparating chordless cycle through the edge in a 3-connected graph");
  }
  return out;
}

namespace {

bool grow_path(const Graph& g, InducedPathSearch& s, Vertex target, CyclePath& out) {
  const Vertex last = s.last();
  const bool must_close = g.has_edge(last, target);
  for (Vertex x : g.neighbors(last)) {
    if (must_close && x != target) continue;
    if (!s.extendable(x)) continue;
    s.tick();
    if (x == target) {
      if (s.remainder_connected_with(x)) {
        out.vertices = s.path();
        out.vertices.push_back(x);
        out.closed = false;
        return true;
      }
      continue;
    }
    s.push(x);
    if (grow_path(g, s, target, out)) return true;
    s.pop();
  }
  return false;
}

}  // namespace

CyclePath nonseparating_chordless_path(const Graph& g, Vertex w, Vertex u, SearchBudget budget) {
  if (!g.is_vertex(w) || !g.is_vertex(u) || w == u) throw PreconditionError("nonseparating_chordless_path: bad ends");
  if (g.has_edge(w, u)) throw PreconditionError("nonseparating_chordless_path: ends are adjacent");
  require_three_connected(g, "nonseparating_chordless_path");
  InducedPathSearch s(g, budget, -1);
  s.push(w);
  CyclePath out;
  if (!grow_path(g, s, u, out)) throw InternalFault("no nonseparating chordless path in a 3-connected graph");
  return out;
}

namespace {

// Chordless paths with exactly `left` more edges ending at an even vertex
// above the start.
bool grow_even_path(const Graph& g, InducedPathSearch& s, std::size_t left, const std::vector<char>& even,
                    CyclePath& out) {
  const Vertex start = s.path().front();
  for (Vertex x : g.neighbors(s.last())) {
    if (!s.extendable(x)) continue;
    s.tick();
    if (left == 1) {
      if (even[idx(x)] && x > start && s.remainder_connected_with(x)) {
        out.vertices = s.path();
        out.vertices.push_back(x);
        out.closed = false;
        return true;
      }
      continue;
    }
    s.push(x);
    if (grow_even_path(g, s, left - 1, even, out)) return true;
    s.pop();
  }
  return false;
}

}  // namespace

CyclePath shortest_even_endpoint_path(const Graph& g, SearchBudget budget) {
  const auto evens = even_degree_vertices(g);
  if (evens.size() < 2) throw PreconditionError("shortest_even_endpoint_path needs two even-degree vertices");
  if (g.vertex_count() % 2 == 0) throw PreconditionError("shortest_even_endpoint_path needs odd order");
  require_three_connected(g, "shortest_even_endpoint_path");

  for (const Edge e : g.edges()) {
    if (g.degree(e.u) % 2 == 0 && g.degree(e.v) % 2 == 0) return CyclePath{{e.u, e.v}, false};
  }

  std::vector<char> even(idx(g.vertex_count()), 0);
  for (Vertex v : evens) even[idx(v)] = 1;
  CyclePath best;
  const auto max_len = static_cast<std::size_t>(g.vertex_count() - 1);
  for (std::size_t len = 2; len <= max_len && best.vertices.empty(); ++len) {
    for (Vertex w : evens) {
      InducedPathSearch s(g, budget, -1);
      s.push(w);
      if (grow_even_path(g, s, len, even, best)) break;
    }
  }
  if (best.vertices.empty()) throw InternalFault("no chordless even-endpoint path in a 3-connected graph");

  // shortening step: cut at the first even internal vertex
  for (;;) {
    auto& vs = best.vertices;
    const auto cut = std::find_if(vs.begin() + 1, vs.end() - 1, [&](Vertex v) { return even[idx(v)] != 0; });
    if (cut == vs.end() - 1) break;
    vs.erase(cut + 1, vs.end());
    if (!is_connected_without(g, vs)) throw InternalFault("shortened even-endpoint path separates the graph");
  }
  return best;
}

std::pair<Vertex, Vertex> eulerian_removable_pair(const Graph& g) {
  if (!is_eulerian(g) || g.edge_count() == 0) {
    throw PreconditionError("eulerian_removable_pair needs a connected Eulerian graph with an edge");
  }
  for (const Edge e : g.edges()) {
    for (const auto& [w, u] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const Vertex one[1] = {w};
      const Vertex two[2] = {w, u};
      if (is_connected_without(g, one) && is_connected_without(g, two)) return {w, u};
    }
  }
  throw InternalFault("connected Eulerian graph without a removable adjacent pair");
}

std::pair<Vertex, Vertex> nonadjacent_removable_pair(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("nonadjacent_removable_pair needs a connected graph");
  if (is_complete(g)) throw PreconditionError("nonadjacent_removable_pair: graph is complete");
  if (is_cycle_graph(g)) throw PreconditionError("nonadjacent_removable_pair: graph is a cycle");
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    for (Vertex y = x + 1; y < g.vertex_count(); ++y) {
      if (g.has_edge(x, y)) continue;
      const Vertex pair[2] = {x, y};
      if (is_connected_without(g, pair)) return {x, y};
    }
  }
  throw InternalFault("connected non-complete non-cycle graph without a removable nonadjacent pair");
}

CycleSplit cycle_split(const Graph& g, const CyclePath& c, std::span<const Vertex> s) {
  if (!c.closed || !is_valid_in(g, c)) throw PreconditionError("cycle_split needs a cycle of the graph");
  if (s.size() % 2 != 0) throw PreconditionError("cycle_split needs an even vertex set");
  std::vector<char> marked(idx(g.vertex_count()), 0);
  for (Vertex v : s) {
    if (!c.contains(v)) throw PreconditionError("cycle_split: vertex " + std::to_string(v) + " is off the cycle");
    if (marked[idx(v)]) throw PreconditionError("cycle_split: repeated vertex " + std::to_string(v));
    marked[idx(v)] = 1;
  }
  const auto& vs = c.vertices;
  const std::size_t len = vs.size();
  std::size_t start = 0;
  if (!s.empty()) {
    const Vertex lowest = *std::min_element(s.begin(), s.end());
    start = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), lowest) - vs.begin());
  }
  std::vector<Edge> parts[2];
  int side = 0;
  for (std::size_t step = 0; step < len; ++step) {
    const Vertex a = vs[(start + step) % len];
    const Vertex b = vs[(start + step + 1) % len];
    parts[side].emplace_back(a, b);
    if (marked[idx(b)]) side ^= 1;
  }
  return {EdgeSubgraph(g, std::move(parts[0])), EdgeSubgraph(g, std::move(parts[1]))};
}

}  // namespace oddcol
