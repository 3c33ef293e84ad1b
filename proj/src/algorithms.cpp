#include "oddcol/algorithms.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <tuple>

#include "oddcol/error.hpp"
#include "oddcol/parity.hpp"

namespace oddcol {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

EdgeSubgraph single(const Graph& g, Vertex a, Vertex b) { return EdgeSubgraph(g, {Edge{a, b}}); }

std::vector<Edge> path_edges(const std::vector<Vertex>& p) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
  return out;
}

}  // namespace

EdgeColoring odd_color_even_order(const Graph& g) {
  require(g.vertex_count() % 2 == 0, "odd_color_even_order needs even order");
  require(g.edge_count() > 0, "odd_color_even_order needs an edge");
  require(is_connected(g), "odd_color_even_order needs a connected graph");

  const EdgeSubgraph tree = spanning_tree(g);
  const EdgeSubgraph rest = subtract(EdgeSubgraph::whole(g), tree);
  const auto d = rest.degrees();
  std::vector<Vertex> fix;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (d[idx(v)] % 2 == 0) fix.push_back(v);
  }
  const EdgeSubgraph join = tree_t_join(tree, ParitySet(std::move(fix)));
  const EdgeSubgraph factor = unite(rest, join);
  const EdgeColoring leftover = odd_color_tree(subtract(tree, join).as_graph());
  const EdgeSubgraph classes[] = {factor, leftover.color_class(g, 1), leftover.color_class(g, 2)};
  return EdgeColoring::from_classes(g, classes, "even-order");
}

EdgeRemoval eulerian_edge_removal(const Graph& g) {
  require(g.vertex_count() % 2 == 1, "eulerian_edge_removal needs odd order");
  require(g.edge_count() > 0 && is_eulerian(g), "eulerian_edge_removal needs a connected Eulerian graph");

  const auto [w, u] = eulerian_removable_pair(g);
  const Vertex removed[1] = {w};
  const Relabeled rest = remove_vertices(g, removed);
  const EdgeSubgraph factor = rest.lift(odd_factor_through_vertex(rest.graph, rest.map(u)), g);

  const Edge e{w, u};
  Graph reduced = remove_edges(g, EdgeSubgraph(g, {e}));
  const EdgeSubgraph first(reduced, std::vector<Edge>(factor.edges().begin(), factor.edges().end()));
  const EdgeSubgraph classes[] = {first, subtract(EdgeSubgraph::whole(reduced), first)};
  EdgeColoring coloring = EdgeColoring::from_classes(reduced, classes, "eulerian-remove");
  return {e, std::move(reduced), std::move(coloring)};
}

EdgeColoring odd3_two_even(const Graph& g, SearchBudget budget) {
  require(g.vertex_count() % 2 == 1, "odd3_two_even needs odd order");
  require(even_degree_vertices(g).size() >= 2, "odd3_two_even needs two even-degree vertices");
  require(is_k_connected(g, 3), "odd3_two_even needs a 3-connected graph");

  const CyclePath path = shortest_even_endpoint_path(g, budget);
  const auto& xs = path.vertices;
  const Vertex w = xs.front();
  const Vertex u = xs.back();

  const Graph without_path = remove_edges(g, as_subgraph(g, path));
  const Vertex removed[1] = {w};
  const Relabeled reduced = remove_vertices(without_path, removed);
  const EdgeSubgraph factor_local = odd_factor_through_vertex(reduced.graph, reduced.map(u));
  const EdgeSubgraph factor = reduced.lift(factor_local, g);
  const Graph leftover = remove_edges(without_path, reduced.lift(factor_local, without_path));

  const auto [h1, h2] = forest_split_decomposition(leftover, w);
  std::vector<Edge> extra[2];
  const int w_degree[2] = {h1.degree(w), h2.degree(w)};
  if ((w_degree[0] + w_degree[1]) % 2 == 0) throw InternalFault("two-even: w has even degree in the split");

  int cls = w_degree[0] % 2 == 0 ? 0 : 1;
  extra[cls].emplace_back(xs[0], xs[1]);
  for (std::size_t s = 1; s + 1 < xs.size(); ++s) {
    const Vertex x = xs[s];
    if (leftover.degree(x) >= 1) {
      const int d1 = h1.degree(x), d2 = h2.degree(x);
      if (d1 % 2 == 0 || d2 % 2 == 0) {
        throw InternalFault("two-even: inner path vertex " + std::to_string(x) + " lacks odd degree in both classes");
      }
    } else {
      cls ^= 1;
    }
    extra[cls].emplace_back(x, xs[s + 1]);
  }

  const EdgeSubgraph classes[] = {
      factor,
      unite(EdgeSubgraph(g, std::vector<Edge>(h1.edges().begin(), h1.edges().end())), EdgeSubgraph(g, extra[0])),
      unite(EdgeSubgraph(g, std::vector<Edge>(h2.edges().begin(), h2.edges().end())), EdgeSubgraph(g, extra[1])),
  };
  return EdgeColoring::from_classes(g, classes, "two-even");
}

bool is_wheel_w4(const Graph& g) {
  if (g.vertex_count() != 5 || g.edge_count() != 8) return false;
  for (Vertex c = 0; c < 5; ++c) {
    if (g.degree(c) != 4) continue;
    const Vertex removed[1] = {c};
    if (is_cycle_graph(remove_vertices(g, removed).graph)) return true;
  }
  return false;
}

std::optional<EdgeColoring> odd3_dominating_even(const Graph& g, Vertex w) {
  const int n = g.vertex_count();
  require(g.is_vertex(w), "odd3_dominating_even: invalid vertex");
  require(n % 2 == 1, "odd3_dominating_even needs odd order");
  require(is_connected(g), "odd3_dominating_even needs a connected graph");
  const auto evens = even_degree_vertices(g);
  require(evens.size() == 1 && evens[0] == w, "odd3_dominating_even: w must be the only even-degree vertex");
  require(g.degree(w) == n - 1, "odd3_dominating_even: w must be adjacent to every other vertex");
  const Vertex center[1] = {w};
  const Relabeled rim = remove_vertices(g, center);
  require(is_connected(rim.graph), "odd3_dominating_even: g - w must be connected");
  if (is_wheel_w4(g)) return std::nullopt;

  const Graph& h = rim.graph;
  Vertex x = 0, y = 0;
  if (is_cycle_graph(h)) {
    // three steps along the rim; both leftover arcs then have even order
    Vertex prev = 0;
    Vertex cur = h.neighbors(0)[0];
    for (int step = 1; step < 3; ++step) {
      const auto nb = h.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    y = cur;
  } else {
    std::tie(x, y) = nonadjacent_removable_pair(h);
  }
  x = rim.lift(x);
  y = rim.lift(y);

  const Vertex dropped[3] = {w, x, y};
  const Relabeled rest = remove_vertices(g, dropped);
  const EdgeSubgraph factor =
      rest.lift(tree_t_join(spanning_forest(rest.graph), ParitySet::all(rest.graph)), g);

  const EdgeSubgraph at_x = EdgeSubgraph::star(g, x);
  std::vector<Edge> first(at_x.edges().begin(), at_x.edges().end());
  for (Vertex v = 0; v < n; ++v) {
    if (v == w || v == x || v == y || g.has_edge(x, v)) continue;
    first.emplace_back(w, v);
  }
  const EdgeSubgraph h1(g, std::move(first));
  const EdgeSubgraph h2 = subtract(subtract(EdgeSubgraph::whole(g), factor), h1);
  const EdgeSubgraph classes[] = {factor, h1, h2};
  return EdgeColoring::from_classes(g, classes, "dominating");
}

// ---------------------------------------------------------------------------

std::string_view to_string(StarCase c) {
  switch (c) {
    case StarCase::OddAttachmentsOddCycle:
      return "odd attachments, odd cycle";
    case StarCase::OddAttachmentsEvenCycle:
      return "odd attachments, even cycle";
    case StarCase::EvenAttachmentsOddCycle:
      return "even attachments, odd cycle";
    case StarCase::NoAttachmentsOddCycleBridged:
      return "no attachments, odd cycle, bridged";
    case StarCase::EvenAttachmentsEvenCycle:
      return "even attachments, even cycle";
    case StarCase::NoAttachmentsEvenCycle:
      return "no attachments, even cycle";
    case StarCase::SecondCycleOddBridged:
      return "no attachments, even cycle, odd second cycle, bridged";
    case StarCase::SecondCycleEvenJoinedOnFirst:
      return "no attachments, even cycle, even second cycle, joined on first";
    case StarCase::SecondCycleEvenJoinedOnSecond:
      return "no attachments, even cycle, even second cycle, joined on second";
  }
  return "unknown";
}

int parity_class(StarCase c) {
  switch (c) {
    case StarCase::OddAttachmentsOddCycle:
      return 1;
    case StarCase::OddAttachmentsEvenCycle:
      return 2;
    case StarCase::EvenAttachmentsOddCycle:
    case StarCase::NoAttachmentsOddCycleBridged:
      return 3;
    default:
      return 4;
  }
}

StarContract check_star_contract(const Graph& g, Vertex w, const EdgeSubgraph& first, const EdgeSubgraph& second) {
  StarContract out;
  if (!g.is_vertex(w) || !first.is_subgraph_of(g) || !second.is_subgraph_of(g)) return out;
  const auto around = g.neighbors(w);
  std::vector<char> in_n(idx(g.vertex_count()), 0);
  for (Vertex v : around) in_n[idx(v)] = 1;

  out.avoids_center = !first.covers(w) && !second.covers(w);
  out.parity_mismatch = (first.covered_count() + second.covered_count()) % 2 == 1;
  out.covers_neighbors = out.components_meet_neighbors = out.odd_exactly_on_neighbors = true;
  for (const EdgeSubgraph* f : {&first, &second}) {
    for (Vertex v : around) {
      if (!f->covers(v)) out.covers_neighbors = false;
    }
    for (const auto& part : edge_components(*f)) {
      const auto vs = part.covered_vertices();
      if (std::none_of(vs.begin(), vs.end(), [&](Vertex v) { return in_n[idx(v)] != 0; })) {
        out.components_meet_neighbors = false;
      }
    }
    const auto d = f->degrees();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (d[idx(v)] > 0 && (d[idx(v)] % 2 == 1) != (in_n[idx(v)] != 0)) out.odd_exactly_on_neighbors = false;
    }
  }
  return out;
}

namespace {

// The parity-pair constructions, carried out inside h = g − w.
class StarBuilder {
 public:
  StarBuilder(const Graph& g, Vertex w, SearchBudget budget)
      : g_(g), w_(w), budget_(budget), local_(remove_vertices(g, std::span<const Vertex>(&w_, 1))),
        h_(local_.graph), in_n_(idx(h_.vertex_count()), 0) {
    for (Vertex v : g.neighbors(w)) in_n_[idx(local_.map(v))] = 1;
  }

  StarParityPair run() {
    Vertex u = -1;
    for (Vertex v = 0; v < g_.vertex_count() && u < 0; ++v) {
      if (v != w_ && !g_.has_edge(v, w_)) u = local_.map(v);
    }
    if (u < 0) throw PreconditionError("star_parity_subgraphs needs a vertex nonadjacent to w");
    u_ = u;
    const Edge e{u, h_.neighbors(u)[0]};
    Vertex avoid = 0;
    while (e.touches(avoid)) ++avoid;
    cycle_ = nonseparating_chordless_cycle(h_, e, avoid, budget_);

    on_cycle_.assign(idx(h_.vertex_count()), 0);
    for (Vertex v : cycle_.vertices) on_cycle_[idx(v)] = 1;
    rest_ = remove_vertices(h_, cycle_.vertices);
    std::vector<Vertex> attach, outside;
    for (Vertex v : cycle_.vertices) {
      if (in_n_[idx(v)]) attach.push_back(v);
    }
    std::sort(attach.begin(), attach.end());
    for (Vertex v = 0; v < h_.vertex_count(); ++v) {
      if (in_n_[idx(v)] && !on_cycle_[idx(v)]) outside.push_back(v);
    }

    const bool odd_attach = attach.size() % 2 == 1;
    const bool odd_cycle = cycle_.vertices.size() % 2 == 1;
    if (odd_attach && odd_cycle) return odd_on_odd(attach, outside);
    if (odd_attach) return odd_on_even(attach, outside);
    if (odd_cycle) return even_on_odd(attach, outside);
    return even_on_even(attach, outside);
  }

 private:
  StarParityPair finish(const EdgeSubgraph& a, const EdgeSubgraph& b, StarCase which) const {
    StarParityPair out{local_.lift(a, g_), local_.lift(b, g_), which};
    const StarContract c = check_star_contract(g_, w_, out.first, out.second);
    if (!c.holds()) throw InternalFault(std::string("parity pair violates its contract (") + std::string(to_string(which)) + ")");
    return out;
  }

  bool valid(const EdgeSubgraph& a, const EdgeSubgraph& b) const {
    return check_star_contract(g_, w_, local_.lift(a, g_), local_.lift(b, g_)).holds();
  }

  // Least neighbor of v off the first cycle, other than `skip`.
  Vertex outside_neighbor(Vertex v, Vertex skip = -1) const {
    for (Vertex y : h_.neighbors(v)) {
      if (!on_cycle_[idx(y)] && y != skip) return y;
    }
    throw InternalFault("cycle vertex without a neighbor off the cycle");
  }

  // Spanning parity subgraph of h − V(C) that is odd exactly on `s`.
  EdgeSubgraph parity_off_cycle(std::vector<Vertex> s) const {
    std::vector<Vertex> mapped;
    for (Vertex v : s) mapped.push_back(rest_->map(v));
    return rest_->lift(spanning_parity_subgraph(rest_->graph, ParitySet(std::move(mapped))), h_);
  }

  static std::vector<Vertex> toggled(std::vector<Vertex> s, Vertex x) {
    const auto it = std::find(s.begin(), s.end(), x);
    if (it == s.end()) {
      s.push_back(x);
    } else {
      s.erase(it);
    }
    return s;
  }

  StarParityPair odd_on_odd(const std::vector<Vertex>& attach, const std::vector<Vertex>& outside) const {
    const Vertex x = outside_neighbor(u_);
    const EdgeSubgraph base = unite(parity_off_cycle(toggled(outside, x)), single(h_, u_, x));
    std::vector<Vertex> ends = attach;
    ends.push_back(u_);
    const CycleSplit split = cycle_split(h_, cycle_, ends);
    return finish(unite(base, split.first), unite(base, split.second), StarCase::OddAttachmentsOddCycle);
  }

  StarParityPair odd_on_even(const std::vector<Vertex>& attach, const std::vector<Vertex>& outside) const {
    const Vertex up = attach.front();
    const Vertex xp = outside_neighbor(up);
    const EdgeSubgraph base = unite(parity_off_cycle(toggled(outside, xp)), single(h_, up, xp));
    const std::vector<Vertex> ends(attach.begin() + 1, attach.end());
    const CycleSplit split = cycle_split(h_, cycle_, ends);
    return finish(unite(base, split.first), unite(base, split.second), StarCase::OddAttachmentsEvenCycle);
  }

  StarParityPair even_on_odd(const std::vector<Vertex>& attach, const std::vector<Vertex>& outside) const {
    const EdgeSubgraph base = parity_off_cycle(outside);
    if (!attach.empty()) {
      const CycleSplit split = cycle_split(h_, cycle_, attach);
      return finish(unite(base, split.first), unite(base, split.second), StarCase::EvenAttachmentsOddCycle);
    }
    std::vector<char> blocked = on_cycle_;
    std::optional<StarParityPair> found;
    for_each_bridge(cycle_, blocked, base, [&](const std::vector<Vertex>& q) {
      const EdgeSubgraph plus = bridged(base, q);
      const Vertex ends[2] = {q.front(), q.back()};
      const CycleSplit split = cycle_split(h_, cycle_, ends);
      const EdgeSubgraph a = unite(plus, split.first), b = unite(plus, split.second);
      if (!valid(a, b)) return false;
      found = finish(a, b, StarCase::NoAttachmentsOddCycleBridged);
      return true;
    });
    if (!found) throw InternalFault("no bridging path completes the parity pair");
    return *found;
  }

  StarParityPair even_on_even(const std::vector<Vertex>& attach, const std::vector<Vertex>& outside) const {
    if (!attach.empty()) {
      const Vertex up = attach.front();
      const Vertex xp = outside_neighbor(up);
      const Vertex x = outside_neighbor(u_, xp);
      const EdgeSubgraph base = unite(parity_off_cycle(toggled(toggled(outside, x), xp)),
                                      unite(single(h_, u_, x), single(h_, up, xp)));
      std::vector<Vertex> ends(attach.begin() + 1, attach.end());
      ends.push_back(u_);
      const CycleSplit split = cycle_split(h_, cycle_, ends);
      return finish(unite(base, split.first), unite(base, split.second), StarCase::EvenAttachmentsEvenCycle);
    }

    const Vertex x1 = outside_neighbor(u_);
    const Vertex x2 = outside_neighbor(u_, x1);
    const EdgeSubgraph forest = parity_off_cycle(toggled(toggled(outside, x1), x2));
    const EdgeSubgraph spokes = unite(single(h_, u_, x1), single(h_, u_, x2));
    const EdgeSubgraph f1 = unite(forest, spokes);
    const EdgeSubgraph f2 = unite(f1, as_subgraph(h_, cycle_));
    if (valid(f1, f2)) return finish(f1, f2, StarCase::NoAttachmentsEvenCycle);

    // x1 and x2 share a component K of the forest that misses N(w)
    EdgeSubgraph rest(h_), component(h_);
    for (const auto& part : edge_components(forest)) {
      if (part.covers(x1)) {
        component = part;
      } else {
        rest = unite(rest, part);
      }
    }
    if (!component.covers(x2)) throw InternalFault("spoke ends in different components yet the pair fails");
    std::vector<Vertex> ring{u_};
    for (Vertex v : forest_path(component, x1, x2)) ring.push_back(v);
    const CyclePath second = make_chordless_through_first(CyclePath{std::move(ring), true});

    if (second.vertices.size() % 2 == 1) {
      std::vector<char> blocked(idx(h_.vertex_count()), 0);
      for (Vertex v : second.vertices) blocked[idx(v)] = 1;
      std::optional<StarParityPair> found;
      for_each_bridge(second, blocked, rest, [&](const std::vector<Vertex>& q) {
        const EdgeSubgraph plus = bridged(rest, q);
        const Vertex ends[2] = {q.front(), q.back()};
        const CycleSplit split = cycle_split(h_, second, ends);
        const EdgeSubgraph a = unite(plus, split.first), b = unite(plus, split.second);
        if (!valid(a, b)) return false;
        found = finish(a, b, StarCase::SecondCycleOddBridged);
        return true;
      });
      if (!found) throw InternalFault("no bridging path completes the parity pair on the second cycle");
      return *found;
    }

    std::vector<char> blocked = on_cycle_;
    for (Vertex v : second.vertices) blocked[idx(v)] = 1;
    const CyclePath* cycles[2] = {&cycle_, &second};
    const StarCase cases[2] = {StarCase::SecondCycleEvenJoinedOnFirst, StarCase::SecondCycleEvenJoinedOnSecond};
    for (int side = 0; side < 2; ++side) {
      const CyclePath& join_on = *cycles[side];
      const EdgeSubgraph other = as_subgraph(h_, *cycles[1 - side]);
      std::optional<StarParityPair> found;
      for_each_bridge(join_on, blocked, rest, [&](const std::vector<Vertex>& q) {
        const EdgeSubgraph plus = bridged(rest, q);
        const Vertex ends[2] = {q.front(), q.back()};
        const CycleSplit split = cycle_split(h_, join_on, ends);
        const EdgeSubgraph& with_u = split.first.covers(u_) ? split.first : split.second;
        const EdgeSubgraph a = unite(plus, with_u);
        const EdgeSubgraph b = unite(a, other);
        if (!valid(a, b)) return false;
        found = finish(a, b, cases[side]);
        return true;
      });
      if (found) return *found;
    }
    throw InternalFault("no bridging path joins the forest to either cycle");
  }

  // Repeatedly shortcut the least chord, keeping a sub-cycle through the
  // first listed vertex (the shorter one when both qualify).
  CyclePath make_chordless_through_first(CyclePath c) const {
    for (;;) {
      const auto& vs = c.vertices;
      const std::size_t len = vs.size();
      std::optional<std::pair<std::size_t, std::size_t>> chord;
      std::optional<Edge> best;
      for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 2; j < len; ++j) {
          if (i == 0 && j == len - 1) continue;
          const Edge e{vs[i], vs[j]};
          if (h_.has_edge(e) && (!best || e < *best)) {
            best = e;
            chord = {i, j};
          }
        }
      }
      if (!chord) return c;
      const auto [i, j] = *chord;
      std::vector<Vertex> inner(vs.begin() + static_cast<std::ptrdiff_t>(i), vs.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      std::vector<Vertex> outer(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      outer.insert(outer.end(), vs.begin() + static_cast<std::ptrdiff_t>(j), vs.end());
      if (i == 0 && inner.size() <= outer.size()) {
        c.vertices = std::move(inner);
      } else {
        c.vertices = std::move(outer);
      }
    }
  }

  // (base △ Q) without the components that miss N(w).
  EdgeSubgraph bridged(const EdgeSubgraph& base, const std::vector<Vertex>& q) const {
    const EdgeSubgraph mixed = symmetric_difference(base, EdgeSubgraph(h_, path_edges(q)));
    EdgeSubgraph out(h_);
    for (const auto& part : edge_components(mixed)) {
      const auto vs = part.covered_vertices();
      if (std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return in_n_[idx(v)] != 0; })) out = unite(out, part);
    }
    return out;
  }

  // Offers paths between two vertices of `target` whose inner vertices are
  // unblocked and include a vertex of `base`, until `accept` returns true.
  // Order: two disjoint paths from a component of base joined inside it,
  // then fans from single base vertices, then plain enumeration.
  void for_each_bridge(const CyclePath& target, const std::vector<char>& blocked, const EdgeSubgraph& base,
                       const std::function<bool(const std::vector<Vertex>&)>& accept) const {
    std::vector<Vertex> cut;
    for (Vertex v = 0; v < h_.vertex_count(); ++v) {
      if (blocked[idx(v)] && !target.contains(v)) cut.push_back(v);
    }
    const Relabeled open = remove_vertices(h_, cut);
    std::vector<Vertex> sinks;
    for (Vertex v : target.vertices) sinks.push_back(open.map(v));
    std::sort(sinks.begin(), sinks.end());
    auto lift_path = [&](const std::vector<Vertex>& p) {
      std::vector<Vertex> out;
      for (Vertex v : p) out.push_back(open.lift(v));
      return out;
    };

    for (const auto& part : edge_components(base)) {
      std::vector<Vertex> sources;
      for (Vertex v : part.covered_vertices()) sources.push_back(open.map(v));
      const auto paths = disjoint_paths(open.graph, sources, sinks, 2, PathTerminals{false, false});
      if (!paths) continue;
      const auto p1 = lift_path((*paths)[0]);
      const auto p2 = lift_path((*paths)[1]);
      std::vector<Vertex> q(p1.rbegin(), p1.rend());
      const auto inside = forest_path(part, p1.front(), p2.front());
      q.insert(q.end(), inside.begin() + 1, inside.end());
      q.insert(q.end(), p2.begin() + 1, p2.end());
      if (accept(q)) return;
    }

    for (Vertex z : base.covered_vertices()) {
      const Vertex source[1] = {open.map(z)};
      const auto paths = disjoint_paths(open.graph, source, sinks, 2, PathTerminals{true, false});
      if (!paths) continue;
      const auto p1 = lift_path((*paths)[0]);
      const auto p2 = lift_path((*paths)[1]);
      std::vector<Vertex> q(p1.rbegin(), p1.rend());
      q.insert(q.end(), p2.begin() + 1, p2.end());
      if (accept(q)) return;
    }

    // exhaustive fallback over simple paths leaving and re-entering target
    std::vector<char> used(idx(h_.vertex_count()), 0);
    std::vector<Vertex> q;
    std::uint64_t nodes = 0;
    std::function<bool(int)> grow = [&](int base_hits) -> bool {
      if (++nodes > budget_.max_nodes) throw BudgetExceeded("bridging path search exceeded its node budget");
      for (Vertex y : h_.neighbors(q.back())) {
        if (used[idx(y)]) continue;
        if (target.contains(y)) {
          if (q.size() < 2 || y < q.front() || base_hits == 0) continue;
          q.push_back(y);
          if (accept(q)) return true;
          q.pop_back();
          continue;
        }
        if (blocked[idx(y)]) continue;
        used[idx(y)] = 1;
        q.push_back(y);
        if (grow(base_hits + (base.covers(y) ? 1 : 0))) return true;
        q.pop_back();
        used[idx(y)] = 0;
      }
      return false;
    };
    std::vector<Vertex> starts = target.vertices;
    std::sort(starts.begin(), starts.end());
    for (Vertex c : starts) {
      used[idx(c)] = 1;
      q = {c};
      if (grow(0)) return;
      used[idx(c)] = 0;
    }
  }

  const Graph& g_;
  Vertex w_;
  SearchBudget budget_;
  Relabeled local_;
  const Graph& h_;
  std::vector<char> in_n_;
  Vertex u_ = -1;
  CyclePath cycle_;
  std::vector<char> on_cycle_;
  std::optional<Relabeled> rest_;
};

}  // namespace

StarParityPair star_parity_subgraphs(const Graph& g, Vertex w, SearchBudget budget) {
  require(g.is_vertex(w), "star_parity_subgraphs: invalid vertex");
  require(g.vertex_count() % 2 == 1, "star_parity_subgraphs needs odd order");
  const auto evens = even_degree_vertices(g);
  require(evens.size() == 1 && evens[0] == w, "star_parity_subgraphs: w must be the only even-degree vertex");
  require(g.degree(w) < g.vertex_count() - 1, "star_parity_subgraphs needs a vertex nonadjacent to w");
  require(is_k_connected(g, 4), "star_parity_subgraphs needs a 4-connected graph");
  return StarBuilder(g, w, budget).run();
}

EdgeColoring odd3_four_connected(const Graph& g, SearchBudget budget) {
  require(g.vertex_count() % 2 == 1, "odd3_four_connected needs odd order");
  require(is_k_connected(g, 4), "odd3_four_connected needs a 4-connected graph");
  const auto evens = even_degree_vertices(g);
  if (evens.size() >= 2) {
    EdgeColoring c = odd3_two_even(g, budget);
    c.set_provenance("four-connected: two-even");
    return c;
  }
  const Vertex w = evens.at(0);
  if (g.degree(w) == g.vertex_count() - 1) {
    auto c = odd3_dominating_even(g, w);
    if (!c) throw InternalFault("a 4-connected graph cannot be the wheel with four spokes");
    c->set_provenance("four-connected: dominating");
    return *c;
  }

  const StarParityPair pair = star_parity_subgraphs(g, w, budget);
  const EdgeSubgraph& chosen = pair.first.covered_count() % 2 == 1 ? pair.first : pair.second;
  const EdgeSubgraph closed = unite(chosen, EdgeSubgraph::star(g, w));
  const Relabeled packed = compact(closed);
  if (!is_eulerian(packed.graph) || packed.graph.vertex_count() % 2 != 0) {
    throw InternalFault("parity pair does not close into an even-order Eulerian subgraph");
  }
  const EdgeSubgraph h1 = packed.lift(odd_factor(packed.graph), g);
  const EdgeSubgraph classes[] = {h1, subtract(closed, h1), subtract(EdgeSubgraph::whole(g), closed)};
  return EdgeColoring::from_classes(g, classes, "four-connected: parity pair (" + std::string(to_string(pair.which)) + ")");
}

EdgeColoring color_auto(const Graph& g, SearchBudget budget, std::uint64_t exact_budget) {
  require(g.edge_count() > 0, "color_auto needs an edge");
  require(is_connected(g), "color_auto needs a connected graph");
  if (is_tree(g)) return odd_color_tree(g);
  if (g.vertex_count() % 2 == 0) return odd_color_even_order(g);
  if (is_k_connected(g, 4)) return odd3_four_connected(g, budget);
  const auto evens = even_degree_vertices(g);
  if (evens.size() >= 2 && is_k_connected(g, 3)) return odd3_two_even(g, budget);
  if (evens.size() == 1 && g.degree(evens[0]) == g.vertex_count() - 1) {
    const Vertex removed[1] = {evens[0]};
    if (is_connected_without(g, removed)) {
      if (auto c = odd3_dominating_even(g, evens[0])) return *c;
    }
  }
  ExactResult exact = exact_odd_chromatic_index(g, 4, exact_budget);
  if (!exact.index) throw InternalFault("exact search found no odd coloring with four colors");
  return exact.witness;
}

}  // namespace oddcol
