// Acceptance run: one PASS/FAIL line per criterion, thresholds fixed below.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oddcol/algorithms.hpp"
#include "oddcol/generators.hpp"
#include "oddcol/io.hpp"
#include "oddcol/parity.hpp"
#include "oracles.hpp"

using namespace oddcol;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Collects the first few failure messages of one criterion.
struct Tally {
  int failures = 0;
  std::string first;
  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

bool valid_within(const Graph& g, const EdgeColoring& c, int k) { return verify_coloring(g, c).valid && c.class_count() <= k; }

Graph bowtie() { return Graph(5, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}, Edge{2, 3}, Edge{2, 4}, Edge{3, 4}}); }

std::string data_path(const std::string& name) { return std::string(ODDCOL_TEST_DATA) + "/" + name; }

std::string label(const Graph& g) {
  return "(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
}

// --- criteria -------------------------------------------------------------

void wheel_four_index(Tally& t) {
  const std::string path = (std::filesystem::temp_directory_path() / "oddcol-acceptance-w4.txt").string();
  {
    std::ofstream out(path);
    write_edge_list(out, wheel(4));
  }
  std::ostringstream out, err;
  const int code = cli::run({"chi", path}, out, err);
  std::remove(path.c_str());
  t.expect(code == 0, "chi exit code " + std::to_string(code));
  t.expect(out.str().rfind("chi_odd = 4\n", 0) == 0, "chi printed: " + out.str().substr(0, 20));
}

void index_four_family(Tally& t, const Graph& base, const char* name) {
  const auto start = Clock::now();
  const auto pair = first_hanrei_pair(base);
  if (!pair) return t.fail(std::string("no admissible edge pair in ") + name);
  const Graph g = hanrei_graph(base, pair->first, pair->second);
  const ExactResult r = exact_odd_chromatic_index(g, 5);
  t.expect(r.index == 4, std::string(name) + ": exact index " + (r.index ? std::to_string(*r.index) : "none"));
  t.expect(seconds_since(start) < 60.0, std::string(name) + ": over 60 s");
}

void index_four(Tally& t) {
  index_four_family(t, complete_bipartite(3, 3), "K33");
  index_four_family(t, hypercube(3), "Q3");
}

void even_order(Tally& t) {
  int small = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph g = random_fixture(FixtureProfile::ConnectedEvenOrder, seed, FixtureOptions{6, 12});
    const EdgeColoring c = odd_color_even_order(g);
    t.expect(valid_within(g, c, 3), "seed " + std::to_string(seed) + " " + label(g));
    if (g.vertex_count() <= 9) {
      ++small;
      const auto exact = exact_odd_chromatic_index(g, 3).index;
      t.expect(exact && c.class_count() >= *exact, "class count below exact at seed " + std::to_string(seed));
    }
  }
  t.expect(small > 0, "no member with at most nine vertices");
}

void trees(Tally& t) {
  int count = 0;
  for (int n = 2; n <= 9; ++n) {
    for (const Graph& tree : oracle::unlabeled_trees(n)) {
      ++count;
      t.expect(valid_within(tree, odd_color_tree(tree), 2), "tree " + oracle::tree_code(tree));
    }
  }
  t.expect(count == 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47, "trees enumerated: " + std::to_string(count));
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph tree = random_fixture(FixtureProfile::Tree, seed, FixtureOptions{10, 60});
    t.expect(valid_within(tree, odd_color_tree(tree), 2), "random tree seed " + std::to_string(seed));
  }
}

void eulerian(Tally& t) {
  std::vector<Graph> corpus{complete_graph(3), complete_graph(5), bowtie()};
  for (std::uint64_t seed = 1; corpus.size() < 100; ++seed) corpus.push_back(random_fixture(FixtureProfile::EulerianOddOrder, seed));
  for (const Graph& g : corpus) {
    const EdgeRemoval r = eulerian_edge_removal(g);
    t.expect(g.has_edge(r.removed) && r.reduced == remove_edges(g, EdgeSubgraph(g, {r.removed})), "bad removal " + label(g));
    t.expect(valid_within(r.reduced, r.coloring, 2), "invalid " + label(g));
  }
}

void two_even(Tally& t) {
  std::vector<Graph> corpus{complete_graph(5), complete_graph(7), circulant(9, {1, 2})};
  for (std::uint64_t seed = 1; corpus.size() < 100; ++seed) {
    corpus.push_back(random_fixture(FixtureProfile::ThreeConnectedTwoEven, seed));
  }
  for (const Graph& g : corpus) t.expect(valid_within(g, odd3_two_even(g), 3), "invalid " + label(g));
}

void wheels(Tally& t) {
  for (int n : {6, 8, 10, 12}) {
    const Graph g = wheel(n);
    const auto c = odd3_dominating_even(g, 0);
    t.expect(c && valid_within(g, *c, 3), "W" + std::to_string(n));
  }
  t.expect(!odd3_dominating_even(wheel(4), 0), "W4 not reported as the exception");
}

// Corpus for the 4-connected construction, shared by two criteria.
std::vector<std::pair<std::string, Graph>> four_connected_corpus() {
  std::vector<std::pair<std::string, Graph>> corpus;
  for (int n : {5, 7, 9, 11}) corpus.emplace_back("K" + std::to_string(n), complete_graph(n));
  corpus.emplace_back("C9(1,2)", circulant(9, {1, 2}));
  corpus.emplace_back("C11(1,2)", circulant(11, {1, 2}));
  corpus.emplace_back("C13(1,3)", circulant(13, {1, 3}));
  corpus.emplace_back("C9(1,2,3)", circulant(9, {1, 2, 3}));
  corpus.emplace_back("C15(1,2,4)", circulant(15, {1, 2, 4}));
  {
    const Graph k9m = complete_minus_matching(9, 4);
    corpus.emplace_back("K9-M", k9m);
    std::vector<Edge> e;
    for (const Edge x : k9m.edges()) {
      if (x != Edge{0, 8} && x != Edge{1, 8}) e.push_back(x);
    }
    e.emplace_back(0, 1);
    corpus.emplace_back("K9-M adjusted", Graph(9, e));
  }
  for (const char* f : {"second_cycle_odd_1.txt", "second_cycle_odd_2.txt", "second_cycle_even_first_1.txt",
                        "second_cycle_even_first_2.txt"}) {
    corpus.emplace_back(f, read_edge_list(data_path(f)));
  }
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    corpus.emplace_back("4conn-odd-order/" + std::to_string(seed), random_fixture(FixtureProfile::FourConnectedOddOrder, seed));
  }
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    corpus.emplace_back("4conn-one-even/" + std::to_string(seed), random_fixture(FixtureProfile::FourConnectedOneEven, seed));
  }
  // small members for exact confirmation, with the parity-pair branch taken
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    corpus.emplace_back("4conn-one-even-small/" + std::to_string(seed),
                        random_fixture(FixtureProfile::FourConnectedOneEven, seed, FixtureOptions{9, 9}));
  }
  return corpus;
}

void four_connected(Tally& t) {
  const auto corpus = four_connected_corpus();
  t.expect(corpus.size() >= 30, "corpus too small");
  std::vector<std::pair<std::string, int>> case_names;
  for (StarCase c : {StarCase::OddAttachmentsOddCycle, StarCase::OddAttachmentsEvenCycle, StarCase::EvenAttachmentsOddCycle,
                     StarCase::NoAttachmentsOddCycleBridged, StarCase::EvenAttachmentsEvenCycle,
                     StarCase::NoAttachmentsEvenCycle, StarCase::SecondCycleOddBridged,
                     StarCase::SecondCycleEvenJoinedOnFirst, StarCase::SecondCycleEvenJoinedOnSecond}) {
    case_names.emplace_back("four-connected: parity pair (" + std::string(to_string(c)) + ")", parity_class(c));
  }
  bool hit[5] = {false, false, false, false, false};
  int confirmed = 0;
  for (const auto& [name, g] : corpus) {
    const bool ok = g.vertex_count() % 2 == 1 && is_k_connected(g, 4);
    t.expect(ok, name + " is not a 4-connected odd-order graph");
    if (!ok) continue;
    const EdgeColoring c = odd3_four_connected(g);
    t.expect(valid_within(g, c, 3), name + " invalid");
    for (const auto& [text, cls] : case_names) {
      if (c.provenance() == text) hit[cls] = true;
    }
    if (g.vertex_count() <= 9) {
      ++confirmed;
      const auto exact = exact_odd_chromatic_index(g, 3).index;
      t.expect(exact.has_value(), name + ": exact search finds no 3-coloring");
    }
  }
  for (int cls = 1; cls <= 4; ++cls) t.expect(hit[cls], "no corpus member drives parity class " + std::to_string(cls));
  t.expect(confirmed > 0, "no member small enough for exact confirmation");
}

void star_contract(Tally& t) {
  int invocations = 0;
  for (const auto& [name, g] : four_connected_corpus()) {
    const auto even = even_degree_vertices(g);
    if (even.size() != 1 || g.degree(even[0]) == g.vertex_count() - 1) continue;
    const Vertex w = even[0];
    const StarParityPair p = star_parity_subgraphs(g, w);
    ++invocations;
    const StarContract k = check_star_contract(g, w, p.first, p.second);
    t.expect(k.avoids_center, name + ": a subgraph touches w");
    t.expect(k.parity_mismatch, name + ": covered counts share a parity");
    t.expect(k.covers_neighbors, name + ": N(w) not covered");
    t.expect(k.components_meet_neighbors, name + ": a component misses N(w)");
    t.expect(k.odd_exactly_on_neighbors, name + ": odd degrees off N(w)");
  }
  t.expect(invocations >= 30, "only " + std::to_string(invocations) + " invocations");
}

void obstruction(Tally& t) {
  const Graph h = complete_minus_matching(6, 3);
  const Graph g = obstruction_graph(h, h.edges()[0]);
  t.expect(g.vertex_count() == 27, "order " + std::to_string(g.vertex_count()));
  t.expect(is_k_connected(g, 3), "not 3-connected");
  t.expect(min_degree(g) >= 4, "minimum degree " + std::to_string(min_degree(g)));
  const auto even = even_degree_vertices(g);
  t.expect(even.size() == 1 && g.degree(even[0]) == 24, "even vertices: " + std::to_string(even.size()));
}

void upper_bound(Tally& t) {
  Rng rng(2024);
  for (int round = 0; round < 100; ++round) {
    const int n = rng.between(4, 10);
    const int m = rng.between(n - 1, std::min(16, n * (n - 1) / 2));
    const Graph g = oracle::random_connected_edges(rng, n, m);
    t.expect(g.edge_count() <= 16, "too many edges");
    const ExactResult r = exact_odd_chromatic_index(g, 4);
    t.expect(r.index && *r.index <= 4 && verify_coloring(g, r.witness).valid, "index above 4 on " + label(g));
  }
}

bool odd_exactly_on(const EdgeSubgraph& j, const std::vector<char>& in_s) {
  for (Vertex v = 0; v < j.vertex_space(); ++v) {
    if ((j.degree(v) % 2 == 1) != (in_s[static_cast<std::size_t>(v)] != 0)) return false;
  }
  return true;
}

void primitives(Tally& t) {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& tree : oracle::unlabeled_trees(n)) {
      const EdgeSubgraph whole = EdgeSubgraph::whole(tree);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        std::vector<Vertex> s;
        std::vector<char> in_s(static_cast<std::size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v) {
          if (mask >> v & 1u) {
            s.push_back(v);
            in_s[static_cast<std::size_t>(v)] = 1;
          }
        }
        const EdgeSubgraph j = tree_t_join(whole, ParitySet(s));
        t.expect(j.is_subgraph_of(tree) && odd_exactly_on(j, in_s), "T-join on " + oracle::tree_code(tree));
      }
    }
  }
  for (int n = 3; n <= 9; ++n) {
    const Graph c = cycle_graph(n);
    CyclePath cyc{{}, true};
    for (Vertex v = 0; v < n; ++v) cyc.vertices.push_back(v);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) % 2) continue;
      std::vector<Vertex> s;
      std::vector<char> in_s(static_cast<std::size_t>(n), 0);
      for (Vertex v = 0; v < n; ++v) {
        if (mask >> v & 1u) {
          s.push_back(v);
          in_s[static_cast<std::size_t>(v)] = 1;
        }
      }
      const CycleSplit split = cycle_split(c, cyc, s);
      const std::string where = "cycle split C" + std::to_string(n) + " mask " + std::to_string(mask);
      t.expect(intersect(split.first, split.second).empty(), where);
      t.expect(unite(split.first, split.second) == EdgeSubgraph::whole(c), where);
      if (s.empty()) {
        t.expect(split.first == EdgeSubgraph::whole(c) && split.second.empty(), where);
      } else {
        t.expect(odd_exactly_on(split.first, in_s) && odd_exactly_on(split.second, in_s), where);
      }
    }
  }
  Rng rng(31);
  int checked = 0;
  while (checked < 100) {
    const int n = 2 * rng.between(1, 7);
    const Graph g = oracle::random_connected(rng, n, rng.between(25, 85));
    for (Vertex w = 0; w < n; ++w) {
      if (g.degree(w) % 2 == 0 || !oracle::connected_without(g, {w})) continue;
      ++checked;
      const EdgeSubgraph f = odd_factor_through_vertex(g, w);
      bool at_w = true, odd = true;
      for (Vertex v : g.neighbors(w)) at_w = at_w && f.contains(Edge{w, v});
      for (Vertex v = 0; v < n; ++v) odd = odd && f.degree(v) % 2 == 1;
      t.expect(at_w, "factor misses an edge at w on " + label(g));
      t.expect(odd, "factor not odd on " + label(g));
      t.expect(is_acyclic(remove_edges(g, f)), "complement has a cycle on " + label(g));
      break;
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Tally&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "odd chromatic index of W4 via the chi command", 1.0, wheel_four_index},
      {2, "index-four family from K33 and Q3, 60 s each", 120.0, index_four},
      {3, "even-order construction on 200 connected graphs", 120.0, even_order},
      {4, "tree coloring on all small trees and 200 random trees", 60.0, trees},
      {5, "Eulerian edge removal on 100 odd-order graphs", 60.0, eulerian},
      {6, "two-even construction on 100 3-connected graphs", 300.0, two_even},
      {7, "dominating construction on wheels, W4 exception", 10.0, wheels},
      {8, "4-connected odd-order corpus, every parity class", 600.0, four_connected},
      {9, "parity-pair contract on every invocation", 600.0, star_contract},
      {10, "obstruction graph from K6 minus a perfect matching", 5.0, obstruction},
      {11, "odd chromatic index at most 4 on 100 small graphs", 300.0, upper_bound},
      {12, "exhaustive T-join, cycle split, odd factor through a vertex", 120.0, primitives},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally t;
    const auto start = Clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      t.fail(std::string("exception: ") + e.what());
    }
    const double took = seconds_since(start);
    if (took > c.limit_seconds) t.fail("took " + std::to_string(took) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    const bool pass = t.failures == 0;
    failed += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", took, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  [" << timing << "]";
    if (!pass) std::cout << "  " << t.failures << " failure(s), first: " << t.first;
    std::cout << '\n';
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failing") << '\n';
  return failed == 0 ? 0 : 1;
}
