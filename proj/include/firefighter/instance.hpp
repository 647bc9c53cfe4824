#pragma once

#include <string>
#include <variant>
#include <vector>

#include "firefighter/errors.hpp"
#include "firefighter/graph.hpp"

namespace ff {

// Geometry the graph was built from, when there is one.
using Geometry = std::variant<std::monostate, PointSet, IntervalSet>;

struct FirefighterInstance {
  Graph graph;
  int source = 0;
  vertex_set targets;
  Geometry geometry;
  double threshold = 1.0;  // disk adjacency threshold for PointSet geometry

  int size() const { return graph.size(); }
  bool is_target(int v) const { return contains(targets, v); }
  const PointSet* points() const { return std::get_if<PointSet>(&geometry); }
  const IntervalSet* intervals() const { return std::get_if<IntervalSet>(&geometry); }

  // Throws input_error on dangling ids; source-in-targets is reported
  // separately by solvers as infeasible_error.
  void validate() const {
    if (source < 0 || source >= size()) throw input_error("source out of range");
    for (int t : targets)
      if (t < 0 || t >= size()) throw input_error("target id " + std::to_string(t) + " out of range");
  }
};

inline FirefighterInstance make_instance(Graph g, int source, std::vector<int> targets) {
  FirefighterInstance inst{std::move(g), source, make_vertex_set(std::move(targets)), {}, 1.0};
  inst.validate();
  return inst;
}

inline FirefighterInstance make_disk_instance(PointSet pts, int source, std::vector<int> targets,
                                              double threshold = 1.0) {
  Graph g = build_unit_disk_graph(pts, threshold);
  FirefighterInstance inst{std::move(g), source, make_vertex_set(std::move(targets)),
                           std::move(pts), threshold};
  inst.validate();
  return inst;
}

inline FirefighterInstance make_interval_instance(IntervalSet ivs, int source,
                                                  std::vector<int> targets) {
  Graph g = build_unit_interval_graph(ivs);
  FirefighterInstance inst{std::move(g), source, make_vertex_set(std::move(targets)),
                           std::move(ivs), 1.0};
  inst.validate();
  return inst;
}

// placements[0] is protected at timestep 1, placements[1] at timestep 2, ...
struct Schedule {
  std::vector<vertex_set> placements;

  int steps() const { return static_cast<int>(placements.size()); }
  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& p : placements) n += p.size();
    return n;
  }
  int max_per_step() const {
    std::size_t m = 0;
    for (const auto& p : placements) m = std::max(m, p.size());
    return static_cast<int>(m);
  }
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

}  // namespace ff
