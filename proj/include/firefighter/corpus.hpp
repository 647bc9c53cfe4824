#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "firefighter/generators.hpp"
#include "firefighter/interval_solver.hpp"
#include "firefighter/oracle.hpp"
#include "firefighter/udg_solver.hpp"

namespace ff {

// Seeded corpora shared by the CLI and the acceptance suite. Instance i of a
// corpus depends only on (seed, i), never on how many instances are drawn.
inline seeded_rng corpus_rng(std::uint64_t seed, int i) {
  return seeded_rng(seed * 0x100000001B3ull + static_cast<std::uint64_t>(i) * 0x9E3779B97F4A7C15ull + 1);
}

enum class corpus_kind { interval, disk, collinear };

inline FirefighterInstance corpus_instance(corpus_kind kind, std::uint64_t seed, int i, int max_n,
                                           int min_n = 3) {
  seeded_rng rng = corpus_rng(seed, i);
  GeneratorConfig cfg;
  cfg.n = rng.uniform_int(min_n, max_n);
  switch (kind) {
    case corpus_kind::interval: return random_interval_instance(rng, cfg);
    case corpus_kind::disk: return random_disk_instance(rng, cfg);
    case corpus_kind::collinear: return random_collinear_instance(rng, cfg);
  }
  return {};
}

struct RatioRow {
  int index = 0;
  int n = 0;
  int approx = 0;
  int optimal = 0;
  double ratio = 1.0;  // 1 when both budgets are 0
};

inline double approximation_ratio(int approx, int optimal) {
  if (optimal == 0) return approx == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(approx) / optimal;
}

inline RatioRow ratio_row(const FirefighterInstance& inst, int index, const UdgOptions& opts = {}) {
  RatioRow r;
  r.index = index;
  r.n = inst.size();
  r.approx = solve_udg(inst, opts).budget;
  r.optimal = min_budget(inst);
  r.ratio = approximation_ratio(r.approx, r.optimal);
  return r;
}

}  // namespace ff
