#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "firefighter/errors.hpp"
#include "firefighter/graph.hpp"
#include "firefighter/instance.hpp"
#include "firefighter/interval_solver.hpp"
#include "firefighter/schedule.hpp"
#include "firefighter/simulate.hpp"
#include "firefighter/vertex_cut.hpp"

namespace ff {

// Fixed order; also the tie-break order wherever directions compete.
enum class direction : int { right = 0, left = 1, up = 2, down = 3 };
inline constexpr std::array<direction, 4> all_directions{direction::right, direction::left,
                                                          direction::up, direction::down};

inline const char* to_string(direction d) {
  switch (d) {
    case direction::right: return "right";
    case direction::left: return "left";
    case direction::up: return "up";
    case direction::down: return "down";
  }
  return "?";
}

inline constexpr int index(direction d) { return static_cast<int>(d); }

// Axis-parallel square circumscribing a vertex's disk.
struct Square {
  int vertex = 0;
  double x_left = 0, x_right = 0, y_down = 0, y_up = 0;
};

struct SquareIndex {
  std::vector<Square> squares;  // indexed by vertex id
  std::vector<int> by_x;        // X_l ascending, ties by Y_d, then id
  std::vector<int> by_y;        // Y_d ascending, ties by X_l, then id
};

inline SquareIndex circumscribe(const PointSet& points, double side = 1.0) {
  SquareIndex idx;
  const int n = static_cast<int>(points.size());
  const double h = side / 2;
  for (int v = 0; v < n; ++v)
    idx.squares.push_back({v, points[v].x - h, points[v].x + h, points[v].y - h, points[v].y + h});
  idx.by_x.resize(n);
  idx.by_y.resize(n);
  for (int v = 0; v < n; ++v) idx.by_x[v] = idx.by_y[v] = v;
  const auto& sq = idx.squares;
  std::sort(idx.by_x.begin(), idx.by_x.end(), [&](int a, int b) {
    if (sq[a].x_left != sq[b].x_left) return sq[a].x_left < sq[b].x_left;
    if (sq[a].y_down != sq[b].y_down) return sq[a].y_down < sq[b].y_down;
    return a < b;
  });
  std::sort(idx.by_y.begin(), idx.by_y.end(), [&](int a, int b) {
    if (sq[a].y_down != sq[b].y_down) return sq[a].y_down < sq[b].y_down;
    if (sq[a].x_left != sq[b].x_left) return sq[a].x_left < sq[b].x_left;
    return a < b;
  });
  return idx;
}

struct BurningRectangle {
  double left = 0, right = 0, down = 0, up = 0;
  std::array<vertex_set, 4> frontier;  // C_m, indexed by direction
};

// Sweep state carried between iterations.
struct SweepState {
  BurningRectangle rect;
  vertex_set layer;  // non-target vertices reached in the previous iteration
  vertex_mask reached;
  vertex_mask is_target;
};

inline SweepState start_sweep(const SquareIndex& idx, const FirefighterInstance& inst) {
  SweepState st;
  const Square& s = idx.squares.at(inst.source);
  st.rect = {s.x_left, s.x_right, s.y_down, s.y_up, {}};
  for (auto& c : st.rect.frontier) c = {inst.source};
  st.layer = {inst.source};
  st.reached.assign(inst.size(), 0);
  st.reached[inst.source] = 1;
  st.is_target = to_mask(inst.size(), inst.targets);
  return st;
}

namespace detail {

// Slab test, closed on the outer face so that squares touching the
// rectangle (disks at distance exactly 1) qualify.
inline bool in_slab(direction d, const Square& w, const BurningRectangle& r) {
  switch (d) {
    case direction::right:
      return r.right - 1 < w.x_left && w.x_left <= r.right && r.down - 1 < w.y_down && w.y_down < r.up;
    case direction::left:
      return r.left <= w.x_right && w.x_right < r.left + 1 && r.down - 1 < w.y_down && w.y_down < r.up;
    case direction::up:
      return r.up - 1 < w.y_down && w.y_down <= r.up && r.left - 1 < w.x_left && w.x_left < r.right;
    case direction::down:
      return r.down <= w.y_up && w.y_up < r.down + 1 && r.left - 1 < w.x_left && w.x_left < r.right;
  }
  return false;
}

inline double protrusion(direction d, const Square& w, const BurningRectangle& r) {
  switch (d) {
    case direction::right: return w.x_right - r.right;
    case direction::left: return r.left - w.x_left;
    case direction::up: return w.y_up - r.up;
    case direction::down: return r.down - w.y_down;
  }
  return 0;
}

}  // namespace detail

// One iteration of the burning-rectangle sweep. Every unreached vertex whose
// disk meets a disk of the previous layer is reached now; it goes to the first
// direction (right, left, up, down) whose slab holds it and whose frontier it
// touches, otherwise to the direction it protrudes furthest in. Frontiers and
// rectangle sides are then updated; sides only ever move outward.
inline std::array<vertex_set, 4> advance_frontier(SweepState& st, const SquareIndex& idx,
                                                  const Graph& g, int /*iteration*/) {
  std::array<vertex_set, 4> found;
  vertex_set fresh;
  for (int u : st.layer)
    for (int w : g.neighbors(u))
      if (!st.reached[w]) fresh.push_back(w);
  fresh = make_vertex_set(std::move(fresh));

  const BurningRectangle& r = st.rect;
  for (int w : fresh) {
    const Square& sq = idx.squares[w];
    int chosen = -1;
    for (direction d : all_directions) {
      if (!detail::in_slab(d, sq, r)) continue;
      const auto& c = r.frontier[index(d)];
      if (std::any_of(c.begin(), c.end(), [&](int v) { return g.adjacent(v, w); })) {
        chosen = index(d);
        break;
      }
    }
    if (chosen < 0) {
      double best = 0;
      for (direction d : all_directions) {
        const double p = detail::protrusion(d, sq, r);
        if (chosen < 0 || p > best) {
          chosen = index(d);
          best = p;
        }
      }
    }
    found[chosen].push_back(w);
  }

  vertex_set next_layer;
  for (direction d : all_directions) {
    const int m = index(d);
    vertex_set burning;
    for (int w : found[m]) {
      st.reached[w] = 1;
      if (!st.is_target[w]) burning.push_back(w);
    }
    next_layer.insert(next_layer.end(), burning.begin(), burning.end());
    if (!burning.empty()) st.rect.frontier[m] = burning;
    for (int v : st.rect.frontier[m]) {
      const Square& sq = idx.squares[v];
      switch (d) {
        case direction::right: st.rect.right = std::max(st.rect.right, sq.x_right); break;
        case direction::left: st.rect.left = std::min(st.rect.left, sq.x_left); break;
        case direction::up: st.rect.up = std::max(st.rect.up, sq.y_up); break;
        case direction::down: st.rect.down = std::min(st.rect.down, sq.y_down); break;
      }
    }
  }
  st.layer = make_vertex_set(std::move(next_layer));
  return found;
}

struct DirectionResult {
  direction dir = direction::right;
  LevelDiagnostics levels;
  LevelChoice choice;
};

struct UdgSolution {
  int budget = 0;
  deadline_map protect;
  Schedule schedule;
  std::array<DirectionResult, 4> directions;
  std::vector<int> level_of;      // sweep level per vertex, unreachable if never reached
  std::vector<int> direction_of;  // -1 if never reached
  std::vector<BurningRectangle> rectangles;  // after each iteration
  int retries = 0;
};

// How the four directional budgets combine. `sum` charges every direction
// its own firefighters; `max` shares one crew, raised as far as EDF needs
// to meet the merged deadlines.
enum class budget_rule { sum, max };

struct UdgOptions {
  budget_rule rule = budget_rule::sum;
};

inline UdgSolution solve_udg(const FirefighterInstance& inst, const UdgOptions& opts = {}) {
  inst.validate();
  const PointSet* pts = inst.points();
  if (!pts) throw input_error("disk solver needs point coordinates");
  if (inst.is_target(inst.source)) throw infeasible_error("fire source is itself a target");
  const Graph& g = inst.graph;
  const int n = g.size();

  UdgSolution sol;
  sol.level_of.assign(n, unreachable);
  sol.direction_of.assign(n, -1);
  sol.level_of[inst.source] = 0;
  const SquareIndex idx = circumscribe(*pts, inst.threshold);
  SweepState st = start_sweep(idx, inst);

  // The sweep: T^i per direction.
  std::vector<std::array<vertex_set, 4>> level_targets;  // index i-1
  int remaining = static_cast<int>(inst.targets.size());
  for (int i = 1; i <= n && remaining > 0 && !st.layer.empty(); ++i) {
    auto found = advance_frontier(st, idx, g, i);
    std::array<vertex_set, 4> t;
    for (int m = 0; m < 4; ++m)
      for (int w : found[m]) {
        sol.level_of[w] = i;
        sol.direction_of[w] = m;
        if (st.is_target[w]) {
          t[m].push_back(w);
          --remaining;
        }
      }
    level_targets.push_back(std::move(t));
    sol.rectangles.push_back(st.rect);
  }
  const int levels = static_cast<int>(level_targets.size());

  // Per direction: the interval rule over that direction's levels.
  for (direction d : all_directions) {
    const int m = index(d);
    DirectionResult& dr = sol.directions[m];
    dr.dir = d;
    vertex_set own;  // direction-m targets at level >= i
    for (int i = 1; i <= levels; ++i)
      own.insert(own.end(), level_targets[i - 1][m].begin(), level_targets[i - 1][m].end());
    own = make_vertex_set(std::move(own));
    int through = 0;
    vertex_set removed;
    for (int i = 1; i <= levels && !own.empty(); ++i) {
      LevelInfo info;
      info.level = i;
      info.targets = level_targets[i - 1][m];
      CutQuery q;
      q.source = inst.source;
      q.targets = own;
      q.removed = removed;
      for (int v = 0; v < n; ++v)
        if (v != inst.source && sol.level_of[v] < i && !contains(removed, v)) q.locked.push_back(v);
      info.cut = min_vertex_cut(g, q);
      const int before = through;
      through += static_cast<int>(info.targets.size());
      info.targets_through = through;
      info.protect_bound = ceil_div(through, i);
      info.cut_bound = ceil_div(before + static_cast<int>(info.cut.size()), i);
      std::erase_if(own, [&](int v) { return contains(info.targets, v); });
      dr.levels.push_back(std::move(info));
      // G_{i+1} drops every target reached at level i, in any direction.
      for (int dd = 0; dd < 4; ++dd)
        removed.insert(removed.end(), level_targets[i - 1][dd].begin(), level_targets[i - 1][dd].end());
      removed = make_vertex_set(std::move(removed));
    }
    dr.choice = choose_strategy(dr.levels);
  }

  auto assemble = [&] {
    sol.budget = 0;
    sol.protect.clear();
    for (const auto& dr : sol.directions) {
      sol.budget = opts.rule == budget_rule::sum ? sol.budget + dr.choice.budget
                                                 : std::max(sol.budget, dr.choice.budget);
      for (auto [v, dl] : dr.choice.protect) add_deadline(sol.protect, v, dl);
    }
    if (opts.rule == budget_rule::max) sol.budget = std::max(sol.budget, min_edf_budget(sol.protect));
    sol.schedule = build_schedule(sol.protect, sol.budget);
  };

  assemble();
  for (;;) {
    const auto sim = simulate(inst, sol.schedule, sol.budget);
    if (sim.ok()) break;
    if (sol.retries >= n)
      throw internal_inconsistency("disk solver: schedule still fails simulation after " +
                                   std::to_string(sol.retries) + " retries");
    // Tighten the deadlines of the direction owning the first burned target.
    int failed = -1, first_time = unreachable;
    for (int t : inst.targets)
      if (sim.burn_time[t] != never && sim.burn_time[t] < first_time) {
        first_time = sim.burn_time[t];
        failed = sol.direction_of[t];
      }
    if (failed < 0) throw internal_inconsistency("disk solver: failure not attributable to a direction");
    auto& choice = sol.directions[failed].choice;
    for (auto& [v, dl] : choice.protect) dl = std::max(1, dl - 1);
    choice.budget = std::max(choice.budget, min_edf_budget(choice.protect));
    ++sol.retries;
    assemble();
  }
  return sol;
}

}  // namespace ff
