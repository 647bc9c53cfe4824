#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "firefighter/errors.hpp"
#include "firefighter/instance.hpp"
#include "firefighter/reduction.hpp"

namespace ff::io {

using json = nlohmann::ordered_json;

inline constexpr const char* instance_format = "firefighter-instance";
inline constexpr const char* tree_format = "rooted-tree";
inline constexpr int format_version = 1;

inline std::string kind_of(const FirefighterInstance& inst) {
  if (inst.points()) return "points";
  if (inst.intervals()) return "intervals";
  return "graph";
}

// Canonical form: fixed key order, sorted targets, no metadata unless given.
inline json instance_to_json(const FirefighterInstance& inst, const json& metadata = nullptr) {
  json j;
  j["format"] = instance_format;
  j["version"] = format_version;
  j["kind"] = kind_of(inst);
  if (const PointSet* pts = inst.points()) {
    j["threshold"] = inst.threshold;
    json arr = json::array();
    for (const auto& p : *pts) arr.push_back({p.x, p.y});
    j["points"] = std::move(arr);
  } else if (const IntervalSet* ivs = inst.intervals()) {
    json arr = json::array();
    for (const auto& iv : *ivs) arr.push_back({iv.left, iv.length});
    j["intervals"] = std::move(arr);
  } else {
    j["vertices"] = inst.size();
    json arr = json::array();
    for (auto [u, v] : inst.graph.edges()) arr.push_back({u, v});
    j["edges"] = std::move(arr);
  }
  j["source"] = inst.source;
  j["targets"] = inst.targets;
  if (!metadata.is_null()) j["metadata"] = metadata;
  return j;
}

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw parse_error(where.empty() ? "/" : where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(where + "/" + key, "missing field");
  return *it;
}

inline double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw parse_error(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw parse_error(where, "non-finite number");
  return v;
}

inline int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw parse_error(where, "expected an integer");
  return j.get<int>();
}

inline std::vector<int> id_list(const json& j, const std::string& where, int n) {
  if (!j.is_array()) throw parse_error(where, "expected an array of vertex ids");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "/" + std::to_string(i);
    const int v = integer(j[i], w);
    if (n >= 0 && (v < 0 || v >= n)) throw parse_error(w, "vertex id " + std::to_string(v) + " does not exist");
    out.push_back(v);
  }
  return out;
}

inline json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(origin, e.what());
  }
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

inline FirefighterInstance instance_from_json(const json& j) {
  using namespace detail;
  if (field(j, "format", "") != instance_format) throw parse_error("/format", "not a firefighter instance");
  if (integer(field(j, "version", ""), "/version") != format_version)
    throw parse_error("/version", "unsupported version");
  const json& kind = field(j, "kind", "");
  if (!kind.is_string()) throw parse_error("/kind", "expected a string");
  const std::string k = kind.get<std::string>();

  FirefighterInstance inst;
  int n = 0;
  if (k == "points") {
    const json& arr = field(j, "points", "");
    if (!arr.is_array()) throw parse_error("/points", "expected an array");
    PointSet pts;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string w = "/points/" + std::to_string(i);
      if (!arr[i].is_array() || arr[i].size() != 2) throw parse_error(w, "expected [x, y]");
      pts.push_back({number(arr[i][0], w + "/0"), number(arr[i][1], w + "/1")});
    }
    double threshold = 1.0;
    if (j.contains("threshold")) threshold = number(j["threshold"], "/threshold");
    if (!(threshold > 0)) throw parse_error("/threshold", "must be positive");
    inst.graph = build_unit_disk_graph(pts, threshold);
    inst.threshold = threshold;
    n = static_cast<int>(pts.size());
    inst.geometry = std::move(pts);
  } else if (k == "intervals") {
    const json& arr = field(j, "intervals", "");
    if (!arr.is_array()) throw parse_error("/intervals", "expected an array");
    IntervalSet ivs;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string w = "/intervals/" + std::to_string(i);
      if (!arr[i].is_array() || arr[i].size() != 2) throw parse_error(w, "expected [left, length]");
      const double left = number(arr[i][0], w + "/0");
      const double len = number(arr[i][1], w + "/1");
      if (len != 1.0) throw parse_error(w + "/1", "interval instances must have unit length");
      ivs.push_back({left, len});
    }
    inst.graph = build_unit_interval_graph(ivs);
    n = static_cast<int>(ivs.size());
    inst.geometry = std::move(ivs);
  } else if (k == "graph") {
    n = integer(field(j, "vertices", ""), "/vertices");
    if (n < 0) throw parse_error("/vertices", "must be non-negative");
    const json& arr = field(j, "edges", "");
    if (!arr.is_array()) throw parse_error("/edges", "expected an array");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string w = "/edges/" + std::to_string(i);
      if (!arr[i].is_array() || arr[i].size() != 2) throw parse_error(w, "expected [u, v]");
      const auto uv = id_list(arr[i], w, n);
      if (uv[0] == uv[1]) throw parse_error(w, "self-loop");
      edges.emplace_back(uv[0], uv[1]);
    }
    inst.graph = Graph::from_edges(n, edges);
  } else {
    throw parse_error("/kind", "unknown kind '" + k + "'");
  }
  inst.source = integer(field(j, "source", ""), "/source");
  if (inst.source < 0 || inst.source >= n)
    throw parse_error("/source", "vertex id " + std::to_string(inst.source) + " does not exist");
  inst.targets = make_vertex_set(id_list(field(j, "targets", ""), "/targets", n));
  return inst;
}

inline FirefighterInstance parse_instance_text(const std::string& text, const std::string& origin = "<input>") {
  return instance_from_json(detail::parse_text(text, origin));
}

inline FirefighterInstance parse_instance(const std::string& path) {
  return parse_instance_text(detail::slurp(path), path);
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json schedule_to_json(const Schedule& s) {
  json arr = json::array();
  for (const auto& p : s.placements) arr.push_back(p);
  return arr;
}

// Either a bare array of per-step id lists or an object with a "schedule" key.
inline Schedule schedule_from_json(const json& j, int n = -1) {
  const json* arr = &j;
  std::string where;
  if (j.is_object()) {
    arr = &detail::field(j, "schedule", "");
    where = "/schedule";
  }
  if (!arr->is_array()) throw parse_error(where.empty() ? "/" : where, "expected an array of steps");
  Schedule s;
  for (std::size_t t = 0; t < arr->size(); ++t) {
    auto ids = detail::id_list((*arr)[t], where + "/" + std::to_string(t), n);
    std::sort(ids.begin(), ids.end());
    s.placements.push_back(std::move(ids));
  }
  return s;
}

inline Schedule parse_schedule(const std::string& path, int n = -1) {
  return schedule_from_json(detail::parse_text(detail::slurp(path), path), n);
}

struct TreeFile {
  RootedTree tree;
  vertex_set gamma;
};

inline TreeFile tree_from_json(const json& j) {
  using namespace detail;
  if (field(j, "format", "") != tree_format) throw parse_error("/format", "not a rooted-tree file");
  const json& par = field(j, "parent", "");
  if (!par.is_array()) throw parse_error("/parent", "expected an array");
  std::vector<int> parents;
  for (std::size_t i = 0; i < par.size(); ++i) parents.push_back(integer(par[i], "/parent/" + std::to_string(i)));
  TreeFile tf;
  try {
    tf.tree = RootedTree::from_parents(parents);
  } catch (const input_error& e) {
    throw parse_error("/parent", e.what());
  }
  if (j.contains("gamma")) tf.gamma = make_vertex_set(id_list(j["gamma"], "/gamma", tf.tree.size()));
  return tf;
}

inline TreeFile parse_tree(const std::string& path) {
  return tree_from_json(detail::parse_text(detail::slurp(path), path));
}

inline json tree_to_json(const RootedTree& t, const vertex_set& gamma) {
  json j;
  j["format"] = tree_format;
  j["version"] = format_version;
  j["parent"] = t.parent;
  j["gamma"] = gamma;
  return j;
}

}  // namespace ff::io
