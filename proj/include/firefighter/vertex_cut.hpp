#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "firefighter/errors.hpp"
#include "firefighter/graph.hpp"

namespace ff {

namespace detail {

// Dinic's algorithm on an integer-capacity network. Augmenting order follows
// edge insertion order, so results are reproducible.
class flow_network {
 public:
  static constexpr long long infinite = std::numeric_limits<long long>::max() / 4;

  explicit flow_network(int n) : head_(n, -1), level_(n), cursor_(n) {}

  void add_edge(int from, int to, long long cap) {
    edges_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  long long max_flow(int s, int t) {
    long long total = 0;
    while (build_levels(s, t)) {
      cursor_ = head_;
      while (long long f = augment(s, t, infinite)) {
        total += f;
        if (total >= infinite) return infinite;
      }
    }
    return total;
  }

  // Nodes reachable from s in the residual network after max_flow.
  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e != -1; e = edges_[e].next)
        if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = 1;
          q.push(edges_[e].to);
        }
    }
    return seen;
  }

 private:
  struct edge {
    int to;
    int next;
    long long cap;
  };

  bool build_levels(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e != -1; e = edges_[e].next)
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          q.push(edges_[e].to);
        }
    }
    return level_[t] >= 0;
  }

  long long augment(int u, int t, long long pushed) {
    if (u == t) return pushed;
    for (int& e = cursor_[u]; e != -1; e = edges_[e].next) {
      edge& ed = edges_[e];
      if (ed.cap <= 0 || level_[ed.to] != level_[u] + 1) continue;
      if (long long f = augment(ed.to, t, std::min(pushed, ed.cap))) {
        ed.cap -= f;
        edges_[e ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<edge> edges_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace detail

// Separate `source` from `targets` inside G[V \ removed]. Vertices in `locked`
// stay in the graph but may not be cut (they are already burning).
struct CutQuery {
  int source = 0;
  vertex_set targets;
  vertex_set removed;
  vertex_set locked;
};

// Minimum-cardinality separating set via vertex splitting: v_in -> v_out has
// capacity 1 for cuttable vertices. The returned cut is the one closest to the
// source (the source side of the residual graph is maximal-reachable), sorted.
inline vertex_set min_vertex_cut(const Graph& g, const CutQuery& q) {
  const int n = g.size();
  if (q.source < 0 || q.source >= n) throw input_error("cut source out of range");
  if (contains(q.targets, q.source))
    throw infeasible_error("fire source is itself a target");
  if (contains(q.removed, q.source)) throw input_error("cut source is removed");

  const vertex_mask removed = to_mask(n, q.removed);
  const vertex_mask locked = to_mask(n, q.locked);
  const int sink = 2 * n;
  detail::flow_network net(2 * n + 1);
  const auto inf = detail::flow_network::infinite;
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    const bool uncuttable = v == q.source || locked[v];
    net.add_edge(2 * v, 2 * v + 1, uncuttable ? inf : 1);
    for (int w : g.neighbors(v))
      if (!removed[w]) net.add_edge(2 * v + 1, 2 * w, inf);
  }
  bool any_target = false;
  for (int t : q.targets) {
    if (t < 0 || t >= n) throw input_error("cut target out of range");
    if (removed[t]) continue;
    net.add_edge(2 * t + 1, sink, inf);
    any_target = true;
  }
  if (!any_target) return {};
  const long long flow = net.max_flow(2 * q.source + 1, sink);
  if (flow >= inf) throw infeasible_error("a target cannot be separated from the source");

  const auto reach = net.residual_reachable(2 * q.source + 1);
  vertex_set cut;
  for (int v = 0; v < n; ++v)
    if (!removed[v] && reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
  return cut;
}

}  // namespace ff
