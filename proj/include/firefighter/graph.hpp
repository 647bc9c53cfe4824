#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "firefighter/errors.hpp"

namespace ff {

using vertex_set = std::vector<int>;  // sorted, unique

inline vertex_set make_vertex_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool contains(const vertex_set& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

// Undirected simple graph on vertices [0, n) with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  // Self-loops are rejected; duplicate edges collapse.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw input_error("edge endpoint out of range");
      if (u == v) throw input_error("self-loop on vertex " + std::to_string(u));
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
  }

  int size() const noexcept { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  bool adjacent(int u, int v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto& a : adj_) m += a.size();
    return m / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
};

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

using PointSet = std::vector<Point>;

struct Interval {
  double left = 0;
  double length = 1;
  double right() const { return left + length; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

using IntervalSet = std::vector<Interval>;

inline double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Closed adjacency rule: distance <= threshold. `epsilon` is added to
// threshold^2 and defaults to 0, which is exact for dyadic coordinates.
inline bool disks_touch(const Point& a, const Point& b, double threshold = 1.0,
                        double epsilon = 0.0) {
  return squared_distance(a, b) <= threshold * threshold + epsilon;
}

inline Graph build_unit_disk_graph(const PointSet& points,
                                   double threshold = 1.0,
                                   double epsilon = 0.0) {
  if (!(threshold > 0) || !std::isfinite(threshold))
    throw input_error("threshold must be positive and finite");
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i)
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y))
      throw input_error("non-finite coordinate at point " + std::to_string(i));

  // Sweep over x so the pair scan stays near-linear on spread-out inputs.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return points[a].x < points[b].x || (points[a].x == points[b].x && a < b);
  });
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    const Point& p = points[order[i]];
    for (int j = i + 1; j < n; ++j) {
      const Point& q = points[order[j]];
      if (q.x - p.x > threshold) break;
      if (disks_touch(p, q, threshold, epsilon)) edges.emplace_back(order[i], order[j]);
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph build_unit_interval_graph(const IntervalSet& intervals) {
  const int n = static_cast<int>(intervals.size());
  for (int i = 0; i < n; ++i)
    if (!std::isfinite(intervals[i].left) || !std::isfinite(intervals[i].length) ||
        intervals[i].length < 0)
      throw input_error("bad interval " + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& a = intervals[i];
      const auto& b = intervals[j];
      if (std::max(a.left, b.left) <= std::min(a.right(), b.right()))
        edges.emplace_back(i, j);
    }
  return Graph::from_edges(n, edges);
}

inline bool all_unit_length(const IntervalSet& intervals) {
  return std::all_of(intervals.begin(), intervals.end(),
                     [](const Interval& iv) { return iv.length == 1.0; });
}

inline constexpr int unreachable = std::numeric_limits<int>::max();

// Membership mask over [0, n); used where vertex_set lookups would be hot.
using vertex_mask = std::vector<char>;

inline vertex_mask to_mask(int n, const vertex_set& s) {
  vertex_mask m(static_cast<std::size_t>(n), 0);
  for (int v : s) m.at(v) = 1;
  return m;
}

// Distances from `source` in the subgraph induced on V \ removed.
inline std::vector<int> bfs_layers(const Graph& g, int source,
                                   const vertex_mask& removed) {
  const int n = g.size();
  if (source < 0 || source >= n) throw input_error("source out of range");
  if (!removed.empty() && removed.at(source))
    throw input_error("source is removed");
  std::vector<int> dist(n, unreachable);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (dist[v] != unreachable) continue;
      if (!removed.empty() && removed[v]) continue;
      dist[v] = dist[u] + 1;
      q.push(v);
    }
  }
  return dist;
}

inline std::vector<int> bfs_layers(const Graph& g, int source,
                                   const vertex_set& removed = {}) {
  return bfs_layers(g, source, removed.empty() ? vertex_mask{} : to_mask(g.size(), removed));
}

}  // namespace ff
