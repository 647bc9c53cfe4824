#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "firefighter/errors.hpp"
#include "firefighter/graph.hpp"
#include "firefighter/instance.hpp"
#include "firefighter/schedule.hpp"
#include "firefighter/simulate.hpp"
#include "firefighter/vertex_cut.hpp"

namespace ff {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

// One level of the sweep. `targets` are the still-unsaved targets at residual
// distance exactly `level`; `cut` separates the fire from every target not yet
// assigned to an earlier level, using only vertices that are unburned at
// timestep `level`.
struct LevelInfo {
  int level = 0;
  vertex_set targets;
  vertex_set cut;
  int targets_through = 0;  // sum of |targets| over levels 1..level
  int protect_bound = 0;    // ceil(targets_through / level)
  int cut_bound = 0;        // ceil((targets_through - |targets| + |cut|) / level)
};

using LevelDiagnostics = std::vector<LevelInfo>;

enum class strategy_kind { protect_targets, cut_at_level };

inline const char* to_string(strategy_kind k) {
  return k == strategy_kind::protect_targets ? "protect-targets" : "cut-at-level";
}

// Budget choice shared by the interval solver and each direction of the disk
// solver: protect every target unless the cheapest cut bound is strictly
// smaller than the largest protect bound, in which case cut at the first
// level attaining the minimum.
struct LevelChoice {
  strategy_kind kind = strategy_kind::protect_targets;
  int budget = 0;
  int cut_level = 0;  // 1-based level, 0 when protecting targets
  deadline_map protect;
};

inline LevelChoice choose_strategy(const LevelDiagnostics& levels) {
  LevelChoice c;
  if (levels.empty()) return c;
  int max_b = 0;
  for (const auto& l : levels) max_b = std::max(max_b, l.protect_bound);
  std::size_t m = 0;
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (levels[i].cut_bound < levels[m].cut_bound) m = i;

  if (max_b <= levels[m].cut_bound) {
    c.kind = strategy_kind::protect_targets;
    c.budget = max_b;
    for (const auto& l : levels)
      for (int t : l.targets) add_deadline(c.protect, t, l.level);
    return c;
  }
  c.kind = strategy_kind::cut_at_level;
  c.cut_level = levels[m].level;
  c.budget = levels[m].cut_bound;
  for (std::size_t k = 0; k < m; ++k) {
    c.budget = std::max(c.budget, levels[k].protect_bound);
    for (int t : levels[k].targets) add_deadline(c.protect, t, levels[k].level);
  }
  for (int v : levels[m].cut) add_deadline(c.protect, v, levels[m].level);
  return c;
}

// Level sets T_i, cut sets K_i and the two bounds per level. Level 1 uses the
// full neighbourhood of the source as its cut.
inline LevelDiagnostics level_sets(const FirefighterInstance& inst) {
  inst.validate();
  if (inst.is_target(inst.source)) throw infeasible_error("fire source is itself a target");
  const Graph& g = inst.graph;
  const int n = g.size();
  LevelDiagnostics out;
  vertex_set remaining = inst.targets;
  vertex_mask removed(n, 0);
  int through = 0;
  for (int i = 1; i <= n && !remaining.empty(); ++i) {
    const auto dist = bfs_layers(g, inst.source, removed);
    // Targets the fire can no longer reach are safe.
    std::erase_if(remaining, [&](int t) { return dist[t] == unreachable; });
    if (remaining.empty()) break;

    LevelInfo info;
    info.level = i;
    for (int t : remaining)
      if (dist[t] == i) info.targets.push_back(t);
    if (i == 1) {
      info.cut = g.neighbors(inst.source);
    } else {
      CutQuery q;
      q.source = inst.source;
      q.targets = remaining;
      for (int v = 0; v < n; ++v) {
        if (removed[v])
          q.removed.push_back(v);
        else if (v != inst.source && dist[v] < i)
          q.locked.push_back(v);
      }
      info.cut = min_vertex_cut(g, q);
    }
    const int before = through;
    through += static_cast<int>(info.targets.size());
    info.targets_through = through;
    info.protect_bound = ceil_div(through, i);
    info.cut_bound = ceil_div(before + static_cast<int>(info.cut.size()), i);

    for (int t : info.targets) removed[t] = 1;
    std::erase_if(remaining, [&](int t) { return dist[t] == i; });
    out.push_back(std::move(info));
  }
  return out;
}

struct Solution {
  int budget = 0;
  deadline_map protect;  // vertex -> latest protection timestep
  Schedule schedule;
  LevelDiagnostics diagnostics;
  strategy_kind kind = strategy_kind::protect_targets;
  int cut_level = 0;
};

// Fails loudly when the simulator disagrees with the constructed plan.
inline void require_feasible(const FirefighterInstance& inst, const Schedule& s, int budget,
                             const char* who) {
  const auto sim = simulate(inst, s, budget);
  if (!sim.ok())
    throw internal_inconsistency(std::string(who) + ": schedule fails simulation" +
                                 (sim.first_violation ? " (" + *sim.first_violation + ")" : ""));
}

inline Solution solve_interval(const FirefighterInstance& inst) {
  if (const IntervalSet* ivs = inst.intervals(); ivs && !all_unit_length(*ivs))
    throw input_error("interval solver requires unit-length intervals");
  Solution sol;
  sol.diagnostics = level_sets(inst);
  LevelChoice c = choose_strategy(sol.diagnostics);
  sol.kind = c.kind;
  sol.cut_level = c.cut_level;
  sol.budget = c.budget;
  sol.protect = std::move(c.protect);
  try {
    sol.schedule = build_schedule(sol.protect, sol.budget);
  } catch (const schedule_error& e) {
    throw internal_inconsistency(std::string("interval solver: ") + e.what());
  }
  require_feasible(inst, sol.schedule, sol.budget, "interval solver");
  return sol;
}

}  // namespace ff
