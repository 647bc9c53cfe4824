#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "firefighter/errors.hpp"
#include "firefighter/instance.hpp"

namespace ff {

struct OracleOptions {
  std::size_t max_states = 20'000'000;
  // Identify states that differ only by permuting true twins (same closed
  // neighbourhood, same target status). Co-located images are true twins.
  bool use_symmetry = true;
};

namespace detail {

using mask64 = std::uint64_t;

inline mask64 bit(int v) { return mask64{1} << v; }

struct state_key {
  mask64 burned;
  mask64 prot;
  friend bool operator==(const state_key&, const state_key&) = default;
};

struct state_hash {
  std::size_t operator()(const state_key& k) const noexcept {
    std::uint64_t h = k.burned * 0x9E3779B97F4A7C15ull;
    h ^= k.prot + 0xC2B2AE3D27D4EB4Full + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

// Game-tree search for the defender. A state is the position right after a
// spread step; the defender moves next. Only vertices in a fire-touching free
// component that contains a target are placement candidates, and every move
// uses min(budget, #candidates) firefighters since extra protection never
// lets more fire through.
class exact_search {
 public:
  exact_search(const FirefighterInstance& inst, int budget, const OracleOptions& opts)
      : n_(inst.size()), budget_(budget), opts_(opts) {
    if (n_ > 64) throw resource_error("exact search supports at most 64 vertices");
    nbr_.assign(n_, 0);
    for (int v = 0; v < n_; ++v)
      for (int w : inst.graph.neighbors(v)) nbr_[v] |= bit(w);
    all_ = n_ == 64 ? ~mask64{0} : (bit(n_) - 1);
    for (int t : inst.targets) targets_ |= bit(t);
    source_ = inst.source;
    build_classes(inst);
  }

  bool solve() { return win(bit(source_), 0); }

  // Replays the winning line from the initial state; call after solve() == true.
  Schedule witness() {
    Schedule s;
    mask64 burned = bit(source_), prot = 0;
    for (int guard = 0; guard <= n_ + 1; ++guard) {
      const auto moves = candidate_moves(burned, prot);
      if (moves.terminal_win) {
        if (moves.protect_all != 0) s.placements.push_back(to_set(moves.protect_all));
        return s;
      }
      bool advanced = false;
      for (mask64 place : moves.options) {
        auto next = after_move(burned, prot, place);
        if (!next) continue;
        if (next->first == burned || win(next->first, next->second)) {
          s.placements.push_back(to_set(place));
          if (next->first == burned) return s;
          burned = next->first;
          prot = next->second;
          advanced = true;
          break;
        }
      }
      if (!advanced) throw internal_inconsistency("witness replay lost the winning line");
    }
    throw internal_inconsistency("witness replay did not terminate");
  }

  std::size_t states_visited() const { return memo_.size(); }

 private:
  struct moves_t {
    bool terminal_win = false;
    bool terminal_loss = false;
    mask64 protect_all = 0;
    std::vector<mask64> options;
  };

  void build_classes(const FirefighterInstance& inst) {
    class_of_.assign(n_, -1);
    std::map<std::pair<mask64, bool>, int> key_to_class;
    for (int v = 0; v < n_; ++v) {
      int c;
      if (opts_.use_symmetry) {
        const auto key = std::make_pair(nbr_[v] | bit(v), inst.is_target(v));
        auto [it, fresh] = key_to_class.emplace(key, static_cast<int>(members_.size()));
        if (fresh) members_.emplace_back();
        c = it->second;
      } else {
        c = static_cast<int>(members_.size());
        members_.emplace_back();
      }
      class_of_[v] = c;
      members_[c].push_back(v);
    }
  }

  static vertex_set to_set(mask64 m) {
    vertex_set out;
    while (m) {
      out.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return out;
  }

  mask64 neighbourhood(mask64 m) const {
    mask64 out = 0;
    while (m) {
      out |= nbr_[std::countr_zero(m)];
      m &= m - 1;
    }
    return out;
  }

  // Flood fill inside `allowed` starting at `seed`.
  mask64 flood(mask64 seed, mask64 allowed) const {
    mask64 reach = seed & allowed, frontier = reach;
    while (frontier) {
      mask64 nxt = neighbourhood(frontier) & allowed & ~reach;
      reach |= nxt;
      frontier = nxt;
    }
    return reach;
  }

  state_key canonical(mask64 burned, mask64 prot) const {
    if (!opts_.use_symmetry) return {burned, prot};
    state_key k{0, 0};
    for (const auto& mem : members_) {
      int b = 0, p = 0;
      for (int v : mem) {
        b += (burned >> v) & 1;
        p += (prot >> v) & 1;
      }
      for (int i = 0; i < static_cast<int>(mem.size()); ++i) {
        if (i < b)
          k.burned |= bit(mem[i]);
        else if (i < b + p)
          k.prot |= bit(mem[i]);
      }
    }
    return k;
  }

  moves_t candidate_moves(mask64 burned, mask64 prot) const {
    moves_t out;
    const mask64 free = all_ & ~burned & ~prot;
    const mask64 touching = neighbourhood(burned) & free;
    const mask64 reach = flood(touching, free);
    if ((reach & targets_) == 0) {
      out.terminal_win = true;
      return out;
    }
    mask64 useful = 0, rest = reach;
    while (rest) {
      const mask64 comp = flood(rest & (~rest + 1), free);
      if (comp & targets_) useful |= comp;
      rest &= ~comp;
    }
    const mask64 forced = touching & targets_;
    if (std::popcount(forced) > budget_) {
      out.terminal_loss = true;
      return out;
    }
    const int k = std::min(budget_, std::popcount(useful));
    if (std::popcount(useful) <= budget_) {
      out.terminal_win = true;
      out.protect_all = useful;
      return out;
    }

    // Per class: free useful members in member order, nearest-to-fire classes first.
    struct slot {
      std::vector<int> avail;
      bool forced;
      int layer;
      int first;
    };
    std::vector<slot> slots;
    std::vector<char> seen(members_.size(), 0);
    mask64 layer_mask = touching & useful;
    std::vector<int> layer_of(n_, 0);
    {
      mask64 done = layer_mask, frontier = layer_mask;
      int layer = 0;
      while (frontier) {
        for (mask64 m = frontier; m; m &= m - 1) layer_of[std::countr_zero(m)] = layer;
        frontier = neighbourhood(frontier) & useful & ~done;
        done |= frontier;
        ++layer;
      }
    }
    for (mask64 m = useful; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int c = class_of_[v];
      if (seen[c]) continue;
      seen[c] = 1;
      slot s{{}, false, layer_of[v], v};
      for (int w : members_[c])
        if ((useful >> w) & 1) s.avail.push_back(w);
      s.forced = (forced >> v) & 1;
      slots.push_back(std::move(s));
    }
    std::stable_sort(slots.begin(), slots.end(), [](const slot& a, const slot& b) {
      return a.forced != b.forced ? a.forced : a.layer < b.layer;
    });
    int need_forced = 0;
    for (const auto& s : slots)
      if (s.forced) need_forced += static_cast<int>(s.avail.size());
    if (need_forced > k) {
      out.terminal_loss = true;
      return out;
    }
    std::vector<int> suffix(slots.size() + 1, 0);
    for (int i = static_cast<int>(slots.size()) - 1; i >= 0; --i)
      suffix[i] = suffix[i + 1] + static_cast<int>(slots[i].avail.size());

    std::function<void(std::size_t, int, mask64)> rec = [&](std::size_t i, int left, mask64 acc) {
      if (left == 0) {
        out.options.push_back(acc);
        return;
      }
      if (i == slots.size() || suffix[i] < left) return;
      const auto& s = slots[i];
      const int cap = std::min<int>(left, static_cast<int>(s.avail.size()));
      const int low = s.forced ? static_cast<int>(s.avail.size()) : 0;
      for (int take = cap; take >= low; --take) {
        mask64 add = 0;
        for (int j = 0; j < take; ++j) add |= bit(s.avail[j]);
        rec(i + 1, left - take, acc | add);
      }
    };
    rec(0, k, 0);
    return out;
  }

  // Protect `place`, then spread. nullopt when a target burns.
  std::optional<std::pair<mask64, mask64>> after_move(mask64 burned, mask64 prot, mask64 place) const {
    const mask64 p2 = prot | place;
    const mask64 spread = neighbourhood(burned) & all_ & ~burned & ~p2;
    if (spread & targets_) return std::nullopt;
    return std::make_pair(burned | spread, p2);
  }

  bool win(mask64 burned, mask64 prot) {
    const state_key key = canonical(burned, prot);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= opts_.max_states)
      throw resource_error("exact search exceeded " + std::to_string(opts_.max_states) + " states");
    const mask64 cb = key.burned, cp = key.prot;
    const auto moves = candidate_moves(cb, cp);
    bool result = false;
    if (moves.terminal_win) {
      result = true;
    } else if (!moves.terminal_loss) {
      for (mask64 place : moves.options) {
        auto next = after_move(cb, cp, place);
        if (!next) continue;
        if (next->first == cb || win(next->first, next->second)) {
          result = true;
          break;
        }
      }
    }
    memo_.emplace(key, result);
    return result;
  }

  int n_;
  int budget_;
  OracleOptions opts_;
  int source_ = 0;
  mask64 all_ = 0;
  mask64 targets_ = 0;
  std::vector<mask64> nbr_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> members_;
  std::unordered_map<state_key, bool, state_hash> memo_;
};

}  // namespace detail

// Winning schedule at `budget`, or nullopt when the targets cannot be saved.
inline std::optional<Schedule> saveable_witness(const FirefighterInstance& inst, int budget,
                                                const OracleOptions& opts = {}) {
  inst.validate();
  if (budget < 0) throw input_error("negative budget");
  if (inst.is_target(inst.source)) return std::nullopt;
  detail::exact_search search(inst, budget, opts);
  if (!search.solve()) return std::nullopt;
  return search.witness();
}

inline bool saveable(const FirefighterInstance& inst, int budget, const OracleOptions& opts = {}) {
  inst.validate();
  if (budget < 0) throw input_error("negative budget");
  if (inst.is_target(inst.source)) return false;
  detail::exact_search search(inst, budget, opts);
  return search.solve();
}

// Binary search over [0, |N(s)|]; protecting the whole neighbourhood at
// step 1 always works when the source is not a target.
inline int min_budget(const FirefighterInstance& inst, const OracleOptions& opts = {}) {
  inst.validate();
  if (inst.is_target(inst.source)) throw infeasible_error("fire source is itself a target");
  int lo = 0, hi = inst.graph.degree(inst.source);
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (saveable(inst, mid, opts))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

// Reference search with no pruning and no symmetry: every subset of unburned,
// unprotected vertices of size <= budget is tried at every step. Memoised on
// the exact (burned, protected) pair only. Meant for n <= 8.
inline bool saveable_exhaustive(const FirefighterInstance& inst, int budget) {
  inst.validate();
  const int n = inst.size();
  if (n > 20) throw resource_error("exhaustive search is limited to 20 vertices");
  if (inst.is_target(inst.source)) return false;
  using detail::bit;
  using detail::mask64;
  std::vector<mask64> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : inst.graph.neighbors(v)) nbr[v] |= bit(w);
  mask64 targets = 0;
  for (int t : inst.targets) targets |= bit(t);
  const mask64 all = bit(n) - 1;
  std::unordered_map<detail::state_key, bool, detail::state_hash> memo;

  std::function<bool(mask64, mask64)> win = [&](mask64 burned, mask64 prot) -> bool {
    if (auto it = memo.find({burned, prot}); it != memo.end()) return it->second;
    const mask64 free = all & ~burned & ~prot;
    bool result = false;
    // Enumerate submasks of `free` with popcount <= budget.
    for (mask64 sub = free;; sub = (sub - 1) & free) {
      if (std::popcount(sub) <= budget) {
        const mask64 p2 = prot | sub;
        mask64 spread = 0;
        for (int v = 0; v < n; ++v)
          if ((burned >> v) & 1) spread |= nbr[v];
        spread &= all & ~burned & ~p2;
        if ((spread & targets) == 0 && (spread == 0 || win(burned | spread, p2))) {
          result = true;
          break;
        }
      }
      if (sub == 0) break;
    }
    memo.emplace(detail::state_key{burned, prot}, result);
    return result;
  };
  return win(bit(inst.source), 0);
}

}  // namespace ff
