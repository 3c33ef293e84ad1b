#include "oddcol/generators.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "oddcol/error.hpp"

namespace oddcol {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

Graph complete_graph(int n) {
  if (n < 0) throw PreconditionError("complete_graph: negative order");
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle_graph needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a) e.emplace_back(a, (a + 1) % n);
  return Graph(n, e);
}

Graph path_graph(int n) {
  if (n < 1) throw PreconditionError("path_graph needs a vertex");
  std::vector<Edge> e;
  for (Vertex a = 0; a + 1 < n; ++a) e.emplace_back(a, a + 1);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw PreconditionError("star_graph: negative leaf count");
  std::vector<Edge> e;
  for (Vertex a = 1; a <= leaves; ++a) e.emplace_back(0, a);
  return Graph(leaves + 1, e);
}

Graph wheel(int n) {
  if (n < 3) throw PreconditionError("wheel needs at least 3 rim vertices");
  std::vector<Edge> e;
  for (Vertex a = 1; a <= n; ++a) {
    e.emplace_back(0, a);
    e.emplace_back(a, a % n + 1);
  }
  return Graph(n + 1, e);
}

Graph circulant(int n, std::span<const int> jumps) {
  if (n < 1) throw PreconditionError("circulant needs a vertex");
  std::vector<Edge> e;
  for (int j : jumps) {
    const int step = ((j % n) + n) % n;
    if (step == 0) throw PreconditionError("circulant jump " + std::to_string(j) + " is a loop");
    for (Vertex a = 0; a < n; ++a) e.emplace_back(a, (a + step) % n);
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return Graph(n, e);
}

Graph circulant(int n, std::initializer_list<int> jumps) {
  return circulant(n, std::span<const int>(jumps.begin(), jumps.size()));
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw PreconditionError("complete_bipartite: negative side");
  std::vector<Edge> e;
  for (Vertex x = 0; x < a; ++x) {
    for (Vertex y = a; y < a + b; ++y) e.emplace_back(x, y);
  }
  return Graph(a + b, e);
}

Graph hypercube(int dimension) {
  if (dimension < 0 || dimension > 16) throw PreconditionError("hypercube dimension out of range");
  const int n = 1 << dimension;
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a) {
    for (int bit = 0; bit < dimension; ++bit) {
      const Vertex b = a ^ (1 << bit);
      if (a < b) e.emplace_back(a, b);
    }
  }
  return Graph(n, e);
}

Graph heawood_graph() {
  // 14-cycle with chords i -- i+5 from even i
  std::vector<Edge> e;
  for (Vertex a = 0; a < 14; ++a) {
    e.emplace_back(a, (a + 1) % 14);
    if (a % 2 == 0) e.emplace_back(a, (a + 5) % 14);
  }
  return Graph(14, e);
}

Graph complete_minus_matching(int n, int pairs) {
  if (pairs < 0 || 2 * pairs > n) throw PreconditionError("complete_minus_matching: too many pairs");
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (b == a + 1 && a % 2 == 0 && b < 2 * pairs) continue;
      e.emplace_back(a, b);
    }
  }
  return Graph(n, e);
}

// ---------------------------------------------------------------------------

bool satisfies_index_four_premises(const Graph& g, Vertex w) {
  if (!g.is_vertex(w) || !is_connected(g) || g.degree(w) != 4) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != w && g.degree(v) != 3) return false;
  }
  const Vertex removed[1] = {w};
  const Relabeled rest = remove_vertices(g, removed);
  const auto sides = bipartition(rest.graph);
  if (!sides) return false;
  // with G − w connected its bipartition is unique, so the count is well defined
  if (!is_connected(rest.graph)) return false;
  int to_first = 0;
  for (Vertex v : g.neighbors(w)) to_first += (*sides)[idx(rest.map(v))] == 0 ? 1 : 0;
  return to_first == 2;
}

Graph hanrei_graph(const Graph& base, Edge e1, Edge e2) {
  const int n = base.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (base.degree(v) != 3) throw PreconditionError("hanrei_graph: base must be cubic");
  }
  if (!bipartition(base)) throw PreconditionError("hanrei_graph: base must be bipartite");
  if (!is_k_connected(base, 3)) throw PreconditionError("hanrei_graph: base must be 3-connected");
  if (!base.has_edge(e1) || !base.has_edge(e2)) throw PreconditionError("hanrei_graph: e1 and e2 must be base edges");
  if (e1.touches(e2.u) || e1.touches(e2.v)) throw PreconditionError("hanrei_graph: e1 and e2 must be disjoint");

  const Vertex w = n;
  std::vector<Edge> e;
  for (const Edge f : base.edges()) {
    if (f != e1 && f != e2) e.push_back(f);
  }
  for (Vertex end : {e1.u, e1.v, e2.u, e2.v}) e.emplace_back(w, end);
  Graph g(n + 1, e);
  if (!satisfies_index_four_premises(g, w)) throw PreconditionError("hanrei_graph: premises fail on the result");
  if (!is_k_connected(g, 3)) throw PreconditionError("hanrei_graph: result is not 3-connected");
  return g;
}

std::optional<std::pair<Edge, Edge>> first_hanrei_pair(const Graph& base) {
  const auto edges = base.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].touches(edges[j].u) || edges[i].touches(edges[j].v)) continue;
      try {
        (void)hanrei_graph(base, edges[i], edges[j]);
        return std::pair{edges[i], edges[j]};
      } catch (const PreconditionError&) {
      }
    }
  }
  return std::nullopt;
}

Graph obstruction_graph(const Graph& h, Edge uv) {
  const int m = h.vertex_count();
  if (m % 2 != 0) throw PreconditionError("obstruction_graph: h must have even order");
  if (!is_eulerian(h)) throw PreconditionError("obstruction_graph: h must be Eulerian");
  if (!is_k_connected(h, 3)) throw PreconditionError("obstruction_graph: h must be 3-connected");
  if (!h.has_edge(uv)) throw PreconditionError("obstruction_graph: uv must be an edge of h");

  const Vertex w = 4 * m, x1 = w + 1, x2 = w + 2;
  std::vector<Edge> e;
  for (int copy = 0; copy < 4; ++copy) {
    const Vertex off = copy * m;
    for (const Edge f : h.edges()) {
      if (f != uv) e.emplace_back(off + f.u, off + f.v);
    }
    e.emplace_back(x1, off + uv.u);
    e.emplace_back(x2, off + uv.v);
    for (Vertex z = 0; z < m; ++z) e.emplace_back(w, off + z);
  }
  e.emplace_back(x1, x2);
  Graph g(w + 3, e);

  const auto evens = even_degree_vertices(g);
  if (evens.size() != 1 || evens[0] != w) throw InternalFault("obstruction_graph: w is not the only even vertex");
  if (min_degree(g) < 4) throw InternalFault("obstruction_graph: minimum degree below 4");
  if (!is_k_connected(g, 3)) throw InternalFault("obstruction_graph: result is not 3-connected");
  return g;
}

// ---------------------------------------------------------------------------

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw PreconditionError("Rng::below(0)");
  // reject the top sliver so every residue is equally likely
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r < limit) return r % n;
  }
}

int Rng::between(int lo, int hi) {
  if (hi < lo) throw PreconditionError("Rng::between: empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::string_view to_string(FixtureProfile p) {
  switch (p) {
    case FixtureProfile::ConnectedEvenOrder:
      return "connected-even-order";
    case FixtureProfile::EulerianOddOrder:
      return "eulerian-odd-order";
    case FixtureProfile::ThreeConnectedTwoEven:
      return "3conn-two-even";
    case FixtureProfile::FourConnectedOddOrder:
      return "4conn-odd-order";
    case FixtureProfile::Tree:
      return "tree";
    case FixtureProfile::FourConnectedOneEven:
      return "4conn-one-even";
  }
  return "unknown";
}

std::optional<FixtureProfile> parse_profile(std::string_view name) {
  for (auto p : {FixtureProfile::ConnectedEvenOrder, FixtureProfile::EulerianOddOrder,
                 FixtureProfile::ThreeConnectedTwoEven, FixtureProfile::FourConnectedOddOrder, FixtureProfile::Tree,
                 FixtureProfile::FourConnectedOneEven}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

namespace {

int draw_order(Rng& rng, int lo, int hi, int parity) {
  // parity: 0 even, 1 odd, -1 any
  for (;;) {
    const int n = rng.between(lo, hi);
    if (parity < 0 || n % 2 == parity) return n;
  }
}

// G(n, p) with p drawn from [lo_pct, hi_pct] percent.
std::vector<std::vector<char>> random_adjacency(Rng& rng, int n, int lo_pct, int hi_pct) {
  const auto p = static_cast<std::uint64_t>(rng.between(lo_pct, hi_pct));
  std::vector<std::vector<char>> adj(idx(n), std::vector<char>(idx(n), 0));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng.chance(p, 100)) adj[idx(a)][idx(b)] = adj[idx(b)][idx(a)] = 1;
    }
  }
  return adj;
}

void toggle(std::vector<std::vector<char>>& adj, Vertex a, Vertex b) {
  adj[idx(a)][idx(b)] ^= 1;
  adj[idx(b)][idx(a)] ^= 1;
}

// Flips edges between consecutive offenders so that only `keep` (if any)
// may end with even degree; with keep < 0 every degree ends even.
void fix_parity(std::vector<std::vector<char>>& adj, Vertex keep) {
  const int n = static_cast<int>(adj.size());
  std::vector<Vertex> bad;
  for (Vertex v = 0; v < n; ++v) {
    if (v == keep) continue;
    int d = 0;
    for (char c : adj[idx(v)]) d += c;
    const bool want_odd = keep >= 0;
    if ((d % 2 == 1) != want_odd) bad.push_back(v);
  }
  if (bad.size() % 2 == 1) bad.push_back(keep);
  for (std::size_t i = 0; i + 1 < bad.size(); i += 2) toggle(adj, bad[i], bad[i + 1]);
}

Graph to_graph(const std::vector<std::vector<char>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (adj[idx(a)][idx(b)]) e.emplace_back(a, b);
    }
  }
  return Graph(n, e);
}

Graph random_tree(Rng& rng, int n) {
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {Edge{0, 1}});
  std::vector<Vertex> code(idx(n - 2));
  for (auto& c : code) c = rng.between(0, n - 1);
  std::vector<int> degree(idx(n), 1);
  for (Vertex c : code) ++degree[idx(c)];
  std::vector<Edge> e;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[idx(leaf)] != 1) ++leaf;
    e.emplace_back(leaf, c);
    --degree[idx(leaf)];
    --degree[idx(c)];
  }
  Vertex a = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[idx(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        e.emplace_back(a, v);
      }
    }
  }
  return Graph(n, e);
}

}  // namespace

Graph random_fixture(FixtureProfile profile, std::uint64_t seed, FixtureOptions options) {
  Rng rng(seed);
  auto range = [&](int lo, int hi) {
    return std::pair{options.min_order > 0 ? options.min_order : lo, options.max_order > 0 ? options.max_order : hi};
  };
  for (std::uint64_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    switch (profile) {
      case FixtureProfile::Tree: {
        const auto [lo, hi] = range(2, 30);
        return random_tree(rng, rng.between(lo, hi));
      }
      case FixtureProfile::ConnectedEvenOrder: {
        const auto [lo, hi] = range(6, 12);
        const Graph g = to_graph(random_adjacency(rng, draw_order(rng, lo, hi, 0), 25, 70));
        if (is_connected(g)) return g;
        break;
      }
      case FixtureProfile::EulerianOddOrder: {
        const auto [lo, hi] = range(5, 11);
        auto adj = random_adjacency(rng, draw_order(rng, lo, hi, 1), 25, 70);
        fix_parity(adj, -1);
        const Graph g = to_graph(adj);
        if (g.edge_count() > 0 && is_eulerian(g)) return g;
        break;
      }
      case FixtureProfile::ThreeConnectedTwoEven: {
        const auto [lo, hi] = range(7, 13);
        const Graph g = to_graph(random_adjacency(rng, draw_order(rng, lo, hi, 1), 40, 80));
        if (even_degree_vertices(g).size() >= 2 && is_k_connected(g, 3)) return g;
        break;
      }
      case FixtureProfile::FourConnectedOddOrder: {
        const auto [lo, hi] = range(7, 13);
        const Graph g = to_graph(random_adjacency(rng, draw_order(rng, lo, hi, 1), 50, 90));
        if (is_k_connected(g, 4)) return g;
        break;
      }
      case FixtureProfile::FourConnectedOneEven: {
        const auto [lo, hi] = range(9, 15);
        const int n = draw_order(rng, lo, hi, 1);
        auto adj = random_adjacency(rng, n, 45, 85);
        const Vertex w = rng.between(0, n - 1);
        fix_parity(adj, w);
        const Graph g = to_graph(adj);
        const auto evens = even_degree_vertices(g);
        if (evens.size() == 1 && g.degree(w) < n - 1 && is_k_connected(g, 4)) return g;
        break;
      }
    }
  }
  throw BudgetExceeded("random_fixture(" + std::string(to_string(profile)) + ", " + std::to_string(seed) +
                       ") exhausted its sampling budget");
}

}  // namespace oddcol
