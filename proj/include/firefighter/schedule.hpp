#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "firefighter/errors.hpp"
#include "firefighter/instance.hpp"

namespace ff {

// vertex -> latest timestep at which it may be protected
using deadline_map = std::map<int, int>;

// Keeps the tighter deadline when a vertex is requested twice.
inline void add_deadline(deadline_map& d, int v, int deadline) {
  auto [it, fresh] = d.emplace(v, deadline);
  if (!fresh) it->second = std::min(it->second, deadline);
}

// Smallest per-step budget for which EDF meets every deadline:
// max over t of ceil(#{deadline <= t} / t).
inline int min_edf_budget(const deadline_map& d) {
  std::vector<int> ds;
  ds.reserve(d.size());
  for (auto [v, dl] : d) {
    if (dl < 1) throw schedule_error("deadline before timestep 1", v, dl);
    ds.push_back(dl);
  }
  std::sort(ds.begin(), ds.end());
  int best = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i + 1 < ds.size() && ds[i + 1] == ds[i]) continue;
    const int jobs = static_cast<int>(i + 1);
    best = std::max(best, (jobs + ds[i] - 1) / ds[i]);
  }
  return best;
}

// Earliest-deadline-first: fill each timestep with up to `budget` vertices in
// (deadline, id) order. Throws schedule_error naming the first missed deadline.
inline Schedule build_schedule(const deadline_map& d, int budget) {
  std::vector<std::pair<int, int>> jobs;  // (deadline, vertex)
  for (auto [v, dl] : d) {
    if (dl < 1) throw schedule_error("deadline before timestep 1", v, dl);
    jobs.emplace_back(dl, v);
  }
  std::sort(jobs.begin(), jobs.end());
  Schedule s;
  if (jobs.empty()) return s;
  if (budget <= 0) throw schedule_error("no firefighters available", jobs.front().second, jobs.front().first);
  for (auto [dl, v] : jobs) {
    if (s.placements.empty() || static_cast<int>(s.placements.back().size()) == budget)
      s.placements.emplace_back();
    const int step = s.steps();
    if (step > dl)
      throw schedule_error("vertex " + std::to_string(v) + " misses deadline " + std::to_string(dl), v, dl);
    s.placements.back().push_back(v);
  }
  for (auto& p : s.placements) std::sort(p.begin(), p.end());
  return s;
}

}  // namespace ff
