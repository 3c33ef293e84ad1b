#include <doctest.h>

#include "oddcol/algorithms.hpp"
#include "oddcol/error.hpp"
#include "oddcol/generators.hpp"
#include "oddcol/io.hpp"
#include "oracles.hpp"

using namespace oddcol;

namespace {

void check_valid(const Graph& g, const EdgeColoring& c, int max_classes) {
  CHECK(verify_coloring(g, c).valid);
  CHECK(c.class_count() <= max_classes);
}

Graph bowtie() { return Graph(5, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}, Edge{2, 3}, Edge{2, 4}, Edge{3, 4}}); }

Graph fixture(const std::string& name) { return read_edge_list(std::string(ODDCOL_TEST_DATA) + "/" + name); }

}  // namespace

TEST_CASE("odd_color_even_order examples") {
  check_valid(complete_graph(2), odd_color_even_order(complete_graph(2)), 1);
  const EdgeColoring c4 = odd_color_even_order(cycle_graph(4));
  check_valid(cycle_graph(4), c4, 3);
  CHECK(c4.class_count() >= 2);
  check_valid(complete_graph(4), odd_color_even_order(complete_graph(4)), 3);
  CHECK_THROWS_AS(odd_color_even_order(complete_graph(3)), PreconditionError);
  CHECK_THROWS_AS(odd_color_even_order(Graph(4, {Edge{0, 1}, Edge{2, 3}})), PreconditionError);
}

TEST_CASE("odd_color_even_order on random connected graphs") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Graph g = random_fixture(FixtureProfile::ConnectedEvenOrder, seed);
    const EdgeColoring c = odd_color_even_order(g);
    check_valid(g, c, 3);
    CHECK(c.provenance() == "even-order");
  }
}

TEST_CASE("eulerian_edge_removal examples") {
  for (const Graph& g : {complete_graph(3), complete_graph(5), bowtie()}) {
    const EdgeRemoval r = eulerian_edge_removal(g);
    CHECK(g.has_edge(r.removed));
    CHECK(r.reduced == remove_edges(g, EdgeSubgraph(g, {r.removed})));
    check_valid(r.reduced, r.coloring, 2);
  }
  const EdgeRemoval c3 = eulerian_edge_removal(complete_graph(3));
  CHECK(c3.coloring.class_count() == 2);
  CHECK_THROWS_AS(eulerian_edge_removal(complete_graph(4)), PreconditionError);
  CHECK_THROWS_AS(eulerian_edge_removal(cycle_graph(4)), PreconditionError);
}

TEST_CASE("eulerian_edge_removal on random fixtures") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Graph g = random_fixture(FixtureProfile::EulerianOddOrder, seed);
    const EdgeRemoval r = eulerian_edge_removal(g);
    check_valid(r.reduced, r.coloring, 2);
  }
}

TEST_CASE("odd3_two_even examples") {
  for (const Graph& g : {complete_graph(5), complete_graph(7), circulant(9, {1, 2}), circulant(9, {1, 2, 3})}) {
    const EdgeColoring c = odd3_two_even(g);
    check_valid(g, c, 3);
    CHECK(c.provenance() == "two-even");
  }
  CHECK(exact_odd_chromatic_index(complete_graph(5), 4).index <= 3);
  CHECK_THROWS_AS(odd3_two_even(wheel(6)), PreconditionError);
  CHECK_THROWS_AS(odd3_two_even(complete_graph(6)), PreconditionError);
}

TEST_CASE("odd3_two_even on random fixtures, with the exact bound on small ones") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const Graph g = random_fixture(FixtureProfile::ThreeConnectedTwoEven, seed);
    const EdgeColoring c = odd3_two_even(g);
    check_valid(g, c, 3);
    if (g.vertex_count() <= 9) CHECK(exact_odd_chromatic_index(g, 3).index <= c.class_count());
  }
}

TEST_CASE("odd3_dominating_even examples") {
  const auto w4 = odd3_dominating_even(wheel(4), 0);
  CHECK_FALSE(w4);
  CHECK(exact_odd_chromatic_index(wheel(4), 4).index == 4);
  CHECK(is_wheel_w4(wheel(4)));
  CHECK_FALSE(is_wheel_w4(wheel(6)));
  CHECK_FALSE(is_wheel_w4(complete_graph(5)));

  for (int n : {6, 8, 10, 12, 14}) {
    const Graph g = wheel(n);
    const auto c = odd3_dominating_even(g, 0);
    REQUIRE(c);
    check_valid(g, *c, 3);
  }

  // rim triangle of chords keeps every rim vertex odd and breaks the cycle shape
  const Graph w6 = wheel(6);
  std::vector<Edge> e(w6.edges().begin(), w6.edges().end());
  e.insert(e.end(), {Edge{1, 3}, Edge{3, 5}, Edge{1, 5}});
  const Graph chorded(7, e);
  REQUIRE(even_degree_vertices(chorded) == std::vector<Vertex>{0});
  const auto c = odd3_dominating_even(chorded, 0);
  REQUIRE(c);
  check_valid(chorded, *c, 3);

  CHECK_THROWS_AS(odd3_dominating_even(wheel(5), 0), PreconditionError);
  CHECK_THROWS_AS(odd3_dominating_even(wheel(6), 1), PreconditionError);
}

TEST_CASE("odd3_dominating_even on random dominated graphs") {
  Rng rng(61);
  int seen = 0;
  while (seen < 150) {
    const int n = 2 * rng.between(2, 7) + 1;
    // random g − w with all degrees even, then w joined to everything
    Graph rest = oracle::random_connected(rng, n - 1, rng.between(20, 80));
    std::vector<Edge> e(rest.edges().begin(), rest.edges().end());
    std::vector<Vertex> bad;
    for (Vertex v = 0; v < n - 1; ++v) {
      if (rest.degree(v) % 2) bad.push_back(v);
    }
    std::set<Edge> set(e.begin(), e.end());
    for (std::size_t i = 0; i + 1 < bad.size(); i += 2) {
      const Edge x{bad[i], bad[i + 1]};
      if (!set.erase(x)) set.insert(x);
    }
    for (Vertex v = 0; v < n - 1; ++v) set.emplace(v, n - 1);
    const Graph g(n, std::vector<Edge>(set.begin(), set.end()));
    const Vertex w = n - 1;
    if (even_degree_vertices(g) != std::vector<Vertex>{w} || !oracle::connected_without(g, {w})) continue;
    ++seen;
    const auto c = odd3_dominating_even(g, w);
    if (is_wheel_w4(g)) {
      CHECK_FALSE(c);
      continue;
    }
    REQUIRE(c);
    check_valid(g, *c, 3);
  }
}

TEST_CASE("star contract verdicts are separate") {
  const Graph g = wheel(6);
  const EdgeSubgraph none(g);
  const StarContract empty = check_star_contract(g, 0, none, none);
  CHECK(empty.avoids_center);
  CHECK_FALSE(empty.parity_mismatch);
  CHECK_FALSE(empty.covers_neighbors);
  CHECK(empty.odd_exactly_on_neighbors);
  const StarContract star = check_star_contract(g, 0, EdgeSubgraph::star(g, 0), EdgeSubgraph(g));
  CHECK_FALSE(star.avoids_center);
  CHECK_FALSE(star.holds());
}

TEST_CASE("star_parity_subgraphs satisfies its contract on random fixtures") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const Graph g = random_fixture(FixtureProfile::FourConnectedOneEven, seed);
    const Vertex w = even_degree_vertices(g).at(0);
    const StarParityPair p = star_parity_subgraphs(g, w);
    const StarContract k = check_star_contract(g, w, p.first, p.second);
    CHECK(k.avoids_center);
    CHECK(k.parity_mismatch);
    CHECK(k.covers_neighbors);
    CHECK(k.components_meet_neighbors);
    CHECK(k.odd_exactly_on_neighbors);
  }
}

TEST_CASE("star_parity_subgraphs reaches the second-cycle constructions") {
  const std::pair<const char*, StarCase> cases[] = {
      {"second_cycle_odd_1.txt", StarCase::SecondCycleOddBridged},
      {"second_cycle_odd_2.txt", StarCase::SecondCycleOddBridged},
      {"second_cycle_even_first_1.txt", StarCase::SecondCycleEvenJoinedOnFirst},
      {"second_cycle_even_first_2.txt", StarCase::SecondCycleEvenJoinedOnFirst},
  };
  for (const auto& [file, which] : cases) {
    const Graph g = fixture(file);
    const Vertex w = even_degree_vertices(g).at(0);
    const StarParityPair p = star_parity_subgraphs(g, w);
    CHECK(p.which == which);
    CHECK(parity_class(p.which) == 4);
    CHECK(check_star_contract(g, w, p.first, p.second).holds());
    const EdgeColoring c = odd3_four_connected(g);
    check_valid(g, c, 3);
    CHECK(c.provenance() == "four-connected: parity pair (" + std::string(to_string(which)) + ")");
  }
}

TEST_CASE("odd3_four_connected examples and dispatch") {
  const EdgeColoring k5 = odd3_four_connected(complete_graph(5));
  check_valid(complete_graph(5), k5, 3);
  CHECK(k5.provenance() == "four-connected: two-even");

  const Graph c9 = circulant(9, {1, 2, 3});
  const EdgeColoring c = odd3_four_connected(c9);
  check_valid(c9, c, 3);
  CHECK(c.provenance() == "four-connected: two-even");

  // K_9 minus a perfect matching on 0..7: vertex 8 is the only even vertex
  // and dominates. Trading 0 8 and 1 8 for 0 1 keeps 8 the only even vertex
  // but leaves it nonadjacent to 0 and 1.
  const Graph k9m = complete_minus_matching(9, 4);
  const EdgeColoring dom = odd3_four_connected(k9m);
  check_valid(k9m, dom, 3);
  CHECK(dom.provenance() == "four-connected: dominating");

  std::vector<Edge> e;
  for (const Edge x : k9m.edges()) {
    if (x != Edge{0, 8} && x != Edge{1, 8}) e.push_back(x);
  }
  e.emplace_back(0, 1);
  const Graph adjusted(9, e);
  REQUIRE(even_degree_vertices(adjusted) == std::vector<Vertex>{8});
  REQUIRE(is_k_connected(adjusted, 4));
  const EdgeColoring pp = odd3_four_connected(adjusted);
  check_valid(adjusted, pp, 3);
  CHECK(pp.provenance().rfind("four-connected: parity pair (", 0) == 0);
  CHECK(exact_odd_chromatic_index(adjusted, 3).index <= 3);

  CHECK_THROWS_AS(odd3_four_connected(wheel(6)), PreconditionError);
  CHECK_THROWS_AS(odd3_four_connected(complete_graph(6)), PreconditionError);
}

TEST_CASE("odd3_four_connected on random odd-order fixtures") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Graph g = random_fixture(FixtureProfile::FourConnectedOddOrder, seed);
    check_valid(g, odd3_four_connected(g), 3);
  }
}

TEST_CASE("color_auto routes and never exceeds the exact index on small graphs") {
  CHECK(color_auto(star_graph(5)).provenance() == "tree");
  CHECK(color_auto(cycle_graph(6)).provenance() == "even-order");
  CHECK(color_auto(complete_graph(5)).provenance() == "four-connected: two-even");
  CHECK(color_auto(wheel(6)).provenance() == "dominating");
  const EdgeColoring w4 = color_auto(wheel(4));
  CHECK(w4.provenance() == "exact search");
  CHECK(w4.class_count() == 4);
  CHECK_THROWS_AS(color_auto(Graph(4, {Edge{0, 1}, Edge{2, 3}})), PreconditionError);

  Rng rng(71);
  for (int round = 0; round < 200; ++round) {
    const Graph g = oracle::random_connected(rng, rng.between(2, 9), rng.between(20, 85));
    const EdgeColoring c = color_auto(g);
    CHECK(verify_coloring(g, c).valid);
    const auto exact = exact_odd_chromatic_index(g, 4).index;
    REQUIRE(exact);
    CHECK(c.class_count() >= *exact);
    // odd order enters a branch with an even vertex
    if (g.vertex_count() % 2 == 1) CHECK_FALSE(even_degree_vertices(g).empty());
  }
}
