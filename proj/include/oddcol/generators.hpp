#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "oddcol/graph.hpp"

namespace oddcol {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Center 0 with leaves 1..leaves.
Graph star_graph(int leaves);
/// Center 0, rim 1..n in cyclic order. Requires n >= 3.
Graph wheel(int n);
/// Vertex i joined to i ± j (mod n) for every jump j.
Graph circulant(int n, std::span<const int> jumps);
Graph circulant(int n, std::initializer_list<int> jumps);
/// Sides 0..a-1 and a..a+b-1.
Graph complete_bipartite(int a, int b);
Graph hypercube(int dimension);
Graph heawood_graph();
/// K_n minus the matching {0 1, 2 3, ...} on its first 2·pairs vertices.
Graph complete_minus_matching(int n, int pairs);

/// Subdivides e1 and e2 of a cubic bipartite 3-connected base and merges
/// the two new vertices into w = base.vertex_count(). The result is checked
/// for: G − w bipartite, deg(w) = 4 and every other degree 3, w sending
/// exactly two edges to each side, and 3-connectivity. Throws
/// PreconditionError when a check fails.
Graph hanrei_graph(const Graph& base, Edge e1, Edge e2);

/// The premises above, without building anything.
bool satisfies_index_four_premises(const Graph& g, Vertex w);

/// Lexicographically first edge pair for which hanrei_graph succeeds.
std::optional<std::pair<Edge, Edge>> first_hanrei_pair(const Graph& base);

/// Four copies H_i = h − u_i v_i (copy i occupies i·|h| .. i·|h| + |h| − 1),
/// then w = 4|h|, x1 = 4|h| + 1, x2 = 4|h| + 2 with edges x1 x2, x1 u_i,
/// x2 v_i and w joined to every copy vertex. Requires h 3-connected,
/// Eulerian, of even order, uv ∈ E(h); the output is checked to be
/// 3-connected with minimum degree 4 and w as its only even vertex.
Graph obstruction_graph(const Graph& h, Edge uv);

/// Deterministic per seed on every platform: bounded draws use rejection on
/// the raw 64-bit engine instead of std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n). Requires n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  /// True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

enum class FixtureProfile {
  ConnectedEvenOrder,
  EulerianOddOrder,
  ThreeConnectedTwoEven,
  FourConnectedOddOrder,
  Tree,
  /// 4-connected, odd order, a unique even vertex that misses some vertex.
  FourConnectedOneEven,
};

std::string_view to_string(FixtureProfile p);
std::optional<FixtureProfile> parse_profile(std::string_view name);

struct FixtureOptions {
  int min_order = 0;  // 0 picks the profile default
  int max_order = 0;
  std::uint64_t max_attempts = 200'000;
};

/// Rejection sampling over seeded random graphs until the profile holds.
/// Throws BudgetExceeded after `max_attempts` rejected draws.
Graph random_fixture(FixtureProfile profile, std::uint64_t seed, FixtureOptions options = {});

}  // namespace oddcol
