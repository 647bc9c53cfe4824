#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "firefighter/instance.hpp"

namespace ff {

// mt19937_64 is specified bit-exactly by the standard; the helpers below avoid
// the implementation-defined distributions so output is portable.
class seeded_rng {
 public:
  explicit seeded_rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  int uniform_int(int lo, int hi) {  // inclusive
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(eng_() % span);
  }
  bool chance(double p) { return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p; }
  // Multiple of 1/denom in [0, hi); keeps all later arithmetic exact.
  double grid(double hi, int denom) {
    const int steps = static_cast<int>(std::floor(hi * denom));
    return steps <= 0 ? 0.0 : static_cast<double>(uniform_int(0, steps - 1)) / denom;
  }

 private:
  std::mt19937_64 eng_;
};

inline constexpr int coordinate_grid = 64;

struct GeneratorConfig {
  int n = 10;
  double target_probability = 0.4;
  double density = 0.6;  // interval span per vertex; disk box side = density * sqrt(n) * 1.5
};

namespace detail {
inline std::vector<int> pick_targets(seeded_rng& rng, int n, int source, double p) {
  std::vector<int> t;
  for (int v = 0; v < n; ++v)
    if (v != source && rng.chance(p)) t.push_back(v);
  return t;
}
}  // namespace detail

// Unit intervals with left endpoints on a 1/64 grid over [0, density * n).
inline FirefighterInstance random_interval_instance(seeded_rng& rng, const GeneratorConfig& cfg) {
  IntervalSet ivs;
  for (int i = 0; i < cfg.n; ++i) ivs.push_back({rng.grid(cfg.density * cfg.n, coordinate_grid), 1.0});
  const int source = rng.uniform_int(0, cfg.n - 1);
  auto targets = detail::pick_targets(rng, cfg.n, source, cfg.target_probability);
  return make_interval_instance(std::move(ivs), source, std::move(targets));
}

// Points on a 1/64 grid in a square box; adjacency at distance <= 1.
inline FirefighterInstance random_disk_instance(seeded_rng& rng, const GeneratorConfig& cfg) {
  const double side = cfg.density * std::sqrt(static_cast<double>(cfg.n)) * 1.5;
  PointSet pts;
  for (int i = 0; i < cfg.n; ++i)
    pts.push_back({rng.grid(side, coordinate_grid), rng.grid(side, coordinate_grid)});
  const int source = rng.uniform_int(0, cfg.n - 1);
  auto targets = detail::pick_targets(rng, cfg.n, source, cfg.target_probability);
  return make_disk_instance(std::move(pts), source, std::move(targets));
}

// Points on the x-axis, consecutive gaps drawn from (0, 1.25] on the grid.
inline FirefighterInstance random_collinear_instance(seeded_rng& rng, const GeneratorConfig& cfg) {
  PointSet pts;
  double x = 0;
  for (int i = 0; i < cfg.n; ++i) {
    pts.push_back({x, 0.0});
    x += static_cast<double>(rng.uniform_int(1, 80)) / coordinate_grid;
  }
  const int source = rng.uniform_int(0, cfg.n - 1);
  auto targets = detail::pick_targets(rng, cfg.n, source, cfg.target_probability);
  return make_disk_instance(std::move(pts), source, std::move(targets));
}

// The unit-interval instance with the same graph as a collinear point set:
// point x maps to [x - 1/2, x + 1/2].
inline FirefighterInstance collinear_as_intervals(const FirefighterInstance& inst) {
  const PointSet* pts = inst.points();
  if (!pts) throw input_error("instance has no point geometry");
  IntervalSet ivs;
  for (const auto& p : *pts) {
    if (p.y != (*pts)[0].y) throw input_error("points are not collinear along the x-axis");
    ivs.push_back({p.x - 0.5, 1.0});
  }
  return make_interval_instance(std::move(ivs), inst.source,
                                std::vector<int>(inst.targets.begin(), inst.targets.end()));
}

}  // namespace ff
