#pragma once

#include <optional>
#include <string>
#include <vector>

#include "firefighter/graph.hpp"
#include "firefighter/instance.hpp"

namespace ff {

inline constexpr int never = -1;

struct SimOutcome {
  std::vector<int> burn_time;     // never when the vertex did not burn
  std::vector<int> protect_time;  // never when the vertex was not protected
  bool saved_targets = false;
  std::optional<std::string> first_violation;
  int last_step = 0;  // final timestep at which fire spread

  vertex_set burned() const { return collect(burn_time); }
  vertex_set protected_set() const { return collect(protect_time); }
  bool ok() const { return saved_targets && !first_violation; }

 private:
  static vertex_set collect(const std::vector<int>& times) {
    vertex_set out;
    for (int v = 0; v < static_cast<int>(times.size()); ++v)
      if (times[v] != never) out.push_back(v);
    return out;
  }
};

// Timestep t = 0 burns the source. For t >= 1 the placements of step t are
// protected first, then fire spreads to every unprotected neighbour of a
// burning vertex. Stops once the fire can no longer spread. Placement errors
// abort the run and are reported in first_violation.
inline SimOutcome simulate(const FirefighterInstance& inst, const Schedule& sched, int budget) {
  const Graph& g = inst.graph;
  const int n = g.size();
  SimOutcome out;
  out.burn_time.assign(n, never);
  out.protect_time.assign(n, never);
  auto finish = [&] {
    out.saved_targets = true;
    for (int t : inst.targets)
      if (out.burn_time[t] != never) out.saved_targets = false;
    return out;
  };
  if (budget < 0) {
    out.first_violation = "negative budget";
    return finish();
  }
  out.burn_time.at(inst.source) = 0;
  std::vector<int> front{inst.source};

  for (int t = 1;; ++t) {
    if (t <= sched.steps()) {
      const auto& place = sched.placements[t - 1];
      if (static_cast<int>(place.size()) > budget) {
        out.first_violation = "step " + std::to_string(t) + ": " + std::to_string(place.size()) +
                              " placements exceed budget " + std::to_string(budget);
        return finish();
      }
      for (int v : place) {
        std::string why;
        if (v < 0 || v >= n)
          why = "vertex id out of range";
        else if (out.burn_time[v] != never)
          why = "vertex is already burning";
        else if (out.protect_time[v] != never)
          why = "vertex is already protected";
        if (!why.empty()) {
          out.first_violation = "step " + std::to_string(t) + ": vertex " + std::to_string(v) + ": " + why;
          return finish();
        }
        out.protect_time[v] = t;
      }
    }
    std::vector<int> next;
    for (int u : front)
      for (int w : g.neighbors(u))
        if (out.burn_time[w] == never && out.protect_time[w] == never) {
          out.burn_time[w] = t;
          next.push_back(w);
        }
    if (next.empty()) break;
    out.last_step = t;
    front = std::move(next);
  }
  return finish();
}

inline bool check_saves(const FirefighterInstance& inst, const Schedule& sched, int budget) {
  return simulate(inst, sched, budget).ok();
}

}  // namespace ff
