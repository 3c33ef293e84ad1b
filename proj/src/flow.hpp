#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

namespace oddcol::detail {

// Edmonds-Karp on a small integer network. Arcs are scanned in insertion
// order, so augmenting paths (and therefore decompositions) are
// deterministic.
class FlowNetwork {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

  explicit FlowNetwork(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

  int add_arc(int from, int to, int capacity) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, 0});
    arcs_.push_back({from, 0, 0});
    out_[static_cast<std::size_t>(from)].push_back(id);
    out_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  // Augments until `limit` units flow or no augmenting path is left.
  int max_flow(int source, int sink, int limit) {
    int total = 0;
    const auto n = out_.size();
    std::vector<int> via(n);
    while (total < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source};
      via[static_cast<std::size_t>(source)] = -2;
      while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int id : out_[static_cast<std::size_t>(x)]) {
          const Arc& a = arcs_[static_cast<std::size_t>(id)];
          if (residual(id) > 0 && via[static_cast<std::size_t>(a.to)] == -1) {
            via[static_cast<std::size_t>(a.to)] = id;
            queue.push_back(a.to);
          }
        }
      }
      if (via[static_cast<std::size_t>(sink)] == -1) break;
      int push = limit - total;
      for (int x = sink; x != source;) {
        const int id = via[static_cast<std::size_t>(x)];
        push = std::min(push, residual(id));
        x = arcs_[static_cast<std::size_t>(id ^ 1)].to;
      }
      for (int x = sink; x != source;) {
        const int id = via[static_cast<std::size_t>(x)];
        arcs_[static_cast<std::size_t>(id)].flow += push;
        arcs_[static_cast<std::size_t>(id ^ 1)].flow -= push;
        x = arcs_[static_cast<std::size_t>(id ^ 1)].to;
      }
      total += push;
    }
    return total;
  }

  // Net flow on a forward arc returned by add_arc.
  int flow(int id) const { return arcs_[static_cast<std::size_t>(id)].flow; }
  void take(int id) { --arcs_[static_cast<std::size_t>(id)].flow; }
  int head(int id) const { return arcs_[static_cast<std::size_t>(id)].to; }
  const std::vector<int>& arcs_from(int node) const { return out_[static_cast<std::size_t>(node)]; }
  bool is_forward(int id) const { return (id & 1) == 0; }

 private:
  struct Arc {
    int to;
    int capacity;
    int flow;
  };

  int residual(int id) const {
    const Arc& a = arcs_[static_cast<std::size_t>(id)];
    return a.capacity - a.flow;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

}  // namespace oddcol::detail
