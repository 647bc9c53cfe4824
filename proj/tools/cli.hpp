#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "firefighter/corpus.hpp"
#include "firefighter/generators.hpp"
#include "firefighter/interval_solver.hpp"
#include "firefighter/io.hpp"
#include "firefighter/oracle.hpp"
#include "firefighter/reduction.hpp"
#include "firefighter/simulate.hpp"
#include "firefighter/udg_solver.hpp"

namespace ff::cli {

enum exit_code : int { ok = 0, solver_failure = 1, usage = 2 };

using io::json;

namespace detail {

inline std::string fmt_ratio(double r) {
  if (std::isinf(r)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", r);
  return buf;
}

inline std::string join(const vertex_set& s, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(s[i]);
  }
  return out;
}

inline void print_schedule(std::ostream& out, const Schedule& s) {
  out << "schedule:\n";
  for (int t = 1; t <= s.steps(); ++t) out << "  t=" << t << ": " << join(s.placements[t - 1]) << "\n";
}

inline void print_protect(std::ostream& out, const deadline_map& d) {
  out << "protect:";
  for (auto [v, dl] : d) out << " " << v << "@" << dl;
  out << "\n";
}

inline json protect_json(const deadline_map& d) {
  json arr = json::array();
  for (auto [v, dl] : d) arr.push_back({v, dl});
  return arr;
}

inline json levels_json(const LevelDiagnostics& levels) {
  json arr = json::array();
  for (const auto& l : levels) {
    json j;
    j["level"] = l.level;
    j["targets"] = l.targets;
    j["cut"] = l.cut;
    j["protect_bound"] = l.protect_bound;
    j["cut_bound"] = l.cut_bound;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline void print_levels(std::ostream& out, const LevelDiagnostics& levels, const char* indent) {
  for (const auto& l : levels)
    out << indent << "i=" << l.level << " T={" << join(l.targets, ",") << "} K={" << join(l.cut, ",")
        << "} B=" << l.protect_bound << " A=" << l.cut_bound << "\n";
}

inline void plot_levels(std::ostream& out, const LevelDiagnostics& levels, const std::string& tag) {
  out << "# " << tag << "protect_bound\nlevel\tB\n";
  for (const auto& l : levels) out << l.level << "\t" << l.protect_bound << "\n";
  out << "\n# " << tag << "cut_bound\nlevel\tA\n";
  for (const auto& l : levels) out << l.level << "\t" << l.cut_bound << "\n";
  out << "\n";
}

inline void plot_points(std::ostream& out, const PointSet& pts) {
  out << "# points\nx\ty\n";
  for (const auto& p : pts) out << p.x << "\t" << p.y << "\n";
  out << "\n";
}

inline void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw parse_error(path, "cannot write file");
  f << text;
}

}  // namespace detail

// Runs one command line. All output goes to `out`/`err`; nothing touches the
// process-wide streams, so tests can call this directly.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Min-budget firefighter solvers for unit interval and unit disk graphs", "ffp"};
  app.require_subcommand(1);

  bool as_json = false, plot = false;
  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "machine-readable JSON output");
    sub->add_flag("--plot-data", plot, "tab-separated plot tables");
  };

  std::string method, input, schedule_path, tree_path, output, kind = "udg", combine = "sum";
  int budget = 0, n = 10, count = 50, max_states = 20'000'000;
  std::uint64_t seed = 1;
  double target_p = 0.4;

  auto* solve = app.add_subcommand("solve", "solve an instance with a polynomial-time solver");
  solve->add_option("--method", method, "interval | udg")->required()->check(CLI::IsMember({"interval", "udg"}));
  solve->add_option("-i,--input", input, "instance file")->required();
  solve->add_option("--combine", combine, "udg: sum | max of the directional budgets")
      ->check(CLI::IsMember({"sum", "max"}));
  add_output_flags(solve);

  auto* sim = app.add_subcommand("simulate", "run a schedule against an instance");
  sim->add_option("-i,--input", input, "instance file")->required();
  sim->add_option("--schedule", schedule_path, "schedule file")->required();
  sim->add_option("--budget", budget, "firefighters per step")->required()->check(CLI::NonNegativeNumber);
  add_output_flags(sim);

  auto* orc = app.add_subcommand("oracle", "exact minimum budget by game-tree search");
  orc->add_option("-i,--input", input, "instance file")->required();
  orc->add_option("--max-states", max_states, "search state limit")->check(CLI::PositiveNumber);
  add_output_flags(orc);

  auto* red = app.add_subcommand("reduce", "embed a rooted tree as a unit disk gadget instance");
  red->add_option("--tree", tree_path, "rooted-tree file")->required();
  red->add_option("-o,--output", output, "write the instance here instead of stdout");
  add_output_flags(red);

  auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
  gen->add_option("--kind", kind, "interval | udg | collinear")->check(CLI::IsMember({"interval", "udg", "collinear"}));
  gen->add_option("--n", n, "vertex count")->check(CLI::Range(1, 64));
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--targets", target_p, "target probability per vertex")->check(CLI::Range(0.0, 1.0));
  gen->add_option("-o,--output", output, "write the instance here instead of stdout");
  add_output_flags(gen);

  auto* rat = app.add_subcommand("ratio", "approximation ratio of the disk solver against the oracle");
  rat->add_option("--n", n, "largest instance size")->check(CLI::Range(3, 20));
  rat->add_option("--count", count, "number of instances")->check(CLI::NonNegativeNumber);
  rat->add_option("--seed", seed, "corpus seed");
  rat->add_option("--combine", combine, "sum | max of the directional budgets")->check(CLI::IsMember({"sum", "max"}));
  add_output_flags(rat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }
  if (as_json && plot) {
    err << "--json and --plot-data are mutually exclusive\n";
    return usage;
  }

  try {
    if (*solve) {
      const auto inst = io::parse_instance(input);
      if (method == "interval") {
        if (!inst.intervals()) throw input_error("--method interval needs an intervals instance");
        const auto s = solve_interval(inst);
        if (plot) {
          detail::plot_levels(out, s.diagnostics, "");
        } else if (as_json) {
          json j;
          j["method"] = method;
          j["budget"] = s.budget;
          j["strategy"] = to_string(s.kind);
          j["cut_level"] = s.cut_level;
          j["protect"] = detail::protect_json(s.protect);
          j["schedule"] = io::schedule_to_json(s.schedule);
          j["levels"] = detail::levels_json(s.diagnostics);
          out << io::dump(j);
        } else {
          out << "method: interval\nbudget: " << s.budget << "\nstrategy: " << to_string(s.kind);
          if (s.kind == strategy_kind::cut_at_level) out << " (level " << s.cut_level << ")";
          out << "\n";
          detail::print_protect(out, s.protect);
          detail::print_schedule(out, s.schedule);
          out << "levels:\n";
          detail::print_levels(out, s.diagnostics, "  ");
        }
      } else {
        UdgOptions uo;
        uo.rule = combine == "max" ? budget_rule::max : budget_rule::sum;
        const auto s = solve_udg(inst, uo);
        if (plot) {
          detail::plot_points(out, *inst.points());
          out << "# rectangle\niteration\tleft\tright\tdown\tup\n";
          for (std::size_t i = 0; i < s.rectangles.size(); ++i) {
            const auto& r = s.rectangles[i];
            out << i + 1 << "\t" << r.left << "\t" << r.right << "\t" << r.down << "\t" << r.up << "\n";
          }
          out << "\n";
          for (const auto& d : s.directions) detail::plot_levels(out, d.levels, std::string(to_string(d.dir)) + " ");
        } else if (as_json) {
          json j;
          j["method"] = method;
          j["combine"] = combine;
          j["budget"] = s.budget;
          j["retries"] = s.retries;
          j["protect"] = detail::protect_json(s.protect);
          j["schedule"] = io::schedule_to_json(s.schedule);
          json dirs = json::array();
          for (const auto& d : s.directions) {
            json dj;
            dj["direction"] = to_string(d.dir);
            dj["budget"] = d.choice.budget;
            dj["strategy"] = to_string(d.choice.kind);
            dj["cut_level"] = d.choice.cut_level;
            dj["levels"] = detail::levels_json(d.levels);
            dirs.push_back(std::move(dj));
          }
          j["directions"] = std::move(dirs);
          out << io::dump(j);
        } else {
          out << "method: udg\ncombine: " << combine << "\nbudget: " << s.budget << "\n";
          for (const auto& d : s.directions) {
            out << "direction " << to_string(d.dir) << ": budget " << d.choice.budget << ", "
                << to_string(d.choice.kind);
            if (d.choice.kind == strategy_kind::cut_at_level) out << " (level " << d.choice.cut_level << ")";
            out << "\n";
            detail::print_levels(out, d.levels, "  ");
          }
          if (s.retries) out << "retries: " << s.retries << "\n";
          detail::print_protect(out, s.protect);
          detail::print_schedule(out, s.schedule);
        }
      }
      return ok;
    }

    if (*sim) {
      const auto inst = io::parse_instance(input);
      const auto sched = io::parse_schedule(schedule_path);
      const auto r = simulate(inst, sched, budget);
      if (plot) {
        out << "# burn_time\nvertex\ttime\n";
        for (int v = 0; v < inst.size(); ++v)
          if (r.burn_time[v] != never) out << v << "\t" << r.burn_time[v] << "\n";
        out << "\n";
      } else if (as_json) {
        json j;
        j["ok"] = r.ok();
        j["saved_targets"] = r.saved_targets;
        j["violation"] = r.first_violation ? json(*r.first_violation) : json(nullptr);
        j["burn_time"] = r.burn_time;
        j["protect_time"] = r.protect_time;
        j["last_step"] = r.last_step;
        out << io::dump(j);
      } else {
        out << "ok: " << (r.ok() ? "yes" : "no") << "\n";
        out << "saved: " << (r.saved_targets ? "yes" : "no") << "\n";
        out << "violation: " << (r.first_violation ? *r.first_violation : "none") << "\n";
        out << "burned:";
        for (int v = 0; v < inst.size(); ++v)
          if (r.burn_time[v] != never) out << " " << v << "@" << r.burn_time[v];
        out << "\nprotected:";
        for (int v = 0; v < inst.size(); ++v)
          if (r.protect_time[v] != never) out << " " << v << "@" << r.protect_time[v];
        out << "\nlast_step: " << r.last_step << "\n";
      }
      return r.ok() ? ok : solver_failure;
    }

    if (*orc) {
      const auto inst = io::parse_instance(input);
      OracleOptions opts;
      opts.max_states = static_cast<std::size_t>(max_states);
      const int b = min_budget(inst, opts);
      const auto w = saveable_witness(inst, b, opts);
      if (!w) throw internal_inconsistency("oracle lost its own witness");
      if (plot) {
        out << "# witness_load\nstep\tplacements\n";
        for (int t = 1; t <= w->steps(); ++t) out << t << "\t" << w->placements[t - 1].size() << "\n";
        out << "\n";
      } else if (as_json) {
        json j;
        j["budget"] = b;
        j["schedule"] = io::schedule_to_json(*w);
        out << io::dump(j);
      } else {
        out << "optimal budget: " << b << "\n";
        detail::print_schedule(out, *w);
      }
      return ok;
    }

    if (*red) {
      const auto tf = io::parse_tree(tree_path);
      const auto gi = build_gadget(tf.tree, tf.gamma);
      json meta;
      meta["generator"] = "tree-gadget";
      meta["tree_size"] = gi.gadget.tree_size;
      meta["N"] = gi.gadget.N;
      meta["gamma"] = tf.gamma;
      meta["tree_parent"] = tf.tree.parent;
      const std::string text = io::dump(io::instance_to_json(gi.instance, meta));
      if (plot) {
        detail::plot_points(out, gi.gadget.points);
      } else if (as_json || output.empty()) {
        detail::emit(out, output, text);
      } else {
        detail::emit(out, output, text);
        out << "wrote " << gi.gadget.points.size() << " points to " << output << "\n";
      }
      return ok;
    }

    if (*gen) {
      seeded_rng rng(seed);
      GeneratorConfig cfg;
      cfg.n = n;
      cfg.target_probability = target_p;
      FirefighterInstance inst;
      if (kind == "interval")
        inst = random_interval_instance(rng, cfg);
      else if (kind == "collinear")
        inst = random_collinear_instance(rng, cfg);
      else
        inst = random_disk_instance(rng, cfg);
      json meta;
      meta["generator"] = "random-" + kind;
      meta["seed"] = seed;
      meta["n"] = n;
      meta["target_probability"] = target_p;
      const std::string text = io::dump(io::instance_to_json(inst, meta));
      if (plot && inst.points())
        detail::plot_points(out, *inst.points());
      else
        detail::emit(out, output, text);
      return ok;
    }

    if (*rat) {
      std::vector<RatioRow> rows;
      UdgOptions uo;
      uo.rule = combine == "max" ? budget_rule::max : budget_rule::sum;
      for (int i = 0; i < count; ++i) rows.push_back(ratio_row(corpus_instance(corpus_kind::disk, seed, i, n), i, uo));
      int violations = 0;
      double worst = 0;
      for (const auto& r : rows) {
        if (r.ratio > 2.0) ++violations;
        worst = std::max(worst, r.ratio);
      }
      if (plot) {
        out << "# ratio\nindex\tratio\n";
        for (const auto& r : rows) out << r.index << "\t" << detail::fmt_ratio(r.ratio) << "\n";
        out << "\n";
      } else if (as_json) {
        json j;
        j["seed"] = seed;
        j["max_n"] = n;
        j["combine"] = combine;
        json arr = json::array();
        for (const auto& r : rows) {
          json rj;
          rj["index"] = r.index;
          rj["n"] = r.n;
          rj["approx"] = r.approx;
          rj["optimal"] = r.optimal;
          rj["ratio"] = detail::fmt_ratio(r.ratio);
          arr.push_back(std::move(rj));
        }
        j["rows"] = std::move(arr);
        j["violations"] = violations;
        j["worst_ratio"] = detail::fmt_ratio(worst);
        out << io::dump(j);
      } else {
        out << "index\tn\tapprox\toptimal\tratio\n";
        for (const auto& r : rows)
          out << r.index << "\t" << r.n << "\t" << r.approx << "\t" << r.optimal << "\t"
              << detail::fmt_ratio(r.ratio) << "\n";
        out << "# instances: " << rows.size() << "  ratio>2: " << violations
            << "  worst: " << detail::fmt_ratio(worst) << "\n";
      }
      return ok;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return solver_failure;
  }
  return usage;
}

}  // namespace ff::cli
