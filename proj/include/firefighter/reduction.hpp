#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "firefighter/errors.hpp"
#include "firefighter/graph.hpp"
#include "firefighter/instance.hpp"
#include "firefighter/simulate.hpp"

namespace ff {

// Rooted tree on vertices [0, m); children are kept in the given order, which
// is the preorder used for numbering.
struct RootedTree {
  int root = 0;
  std::vector<int> parent;  // parent[root] == -1
  std::vector<std::vector<int>> children;

  int size() const { return static_cast<int>(parent.size()); }

  // Children are ordered by id. The root may have three children (degree 3);
  // any other vertex at most two.
  static RootedTree from_parents(const std::vector<int>& parents) {
    RootedTree t;
    const int m = static_cast<int>(parents.size());
    if (m == 0) throw input_error("tree has no vertices");
    t.parent = parents;
    t.children.assign(m, {});
    int roots = 0;
    for (int v = 0; v < m; ++v) {
      const int p = parents[v];
      if (p == -1) {
        t.root = v;
        ++roots;
      } else if (p < 0 || p >= m || p == v) {
        throw input_error("bad parent for tree vertex " + std::to_string(v));
      } else {
        t.children[p].push_back(v);
      }
    }
    if (roots != 1) throw input_error("tree must have exactly one root");
    // Acyclic and connected: every vertex reaches the root.
    for (int v = 0; v < m; ++v) {
      int u = v, steps = 0;
      while (u != t.root) {
        u = parents[u];
        if (++steps > m) throw input_error("parent array has a cycle");
      }
    }
    for (int v = 0; v < m; ++v) {
      const int deg = static_cast<int>(t.children[v].size()) + (v == t.root ? 0 : 1);
      if (deg > 3) throw input_error("vertex " + std::to_string(v) + " has degree > 3");
    }
    return t;
  }

  std::vector<int> depth() const {
    std::vector<int> d(size(), 0);
    std::function<void(int)> walk = [&](int v) {
      for (int c : children[v]) {
        d[c] = d[v] + 1;
        walk(c);
      }
    };
    walk(root);
    return d;
  }

  Graph graph() const {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < size(); ++v)
      if (parent[v] >= 0) e.emplace_back(parent[v], v);
    return Graph::from_edges(size(), e);
  }
};

// Tree-side instance: fire starts at the root.
inline FirefighterInstance tree_instance(const RootedTree& t, const vertex_set& gamma) {
  return make_instance(t.graph(), t.root, std::vector<int>(gamma.begin(), gamma.end()));
}

// Numbers for T' = T plus a new vertex s above the root; s gets id m. Leaves
// are numbered 1..L in preorder; an internal vertex takes its only child's
// number, the larger of two, or the median of three.
inline std::vector<int> number_vertices(const RootedTree& t) {
  const int m = t.size();
  std::vector<int> num(m + 1, 0);
  int next_leaf = 1;
  std::function<void(int)> walk = [&](int v) {
    const auto& ch = t.children[v];
    if (ch.empty()) {
      num[v] = next_leaf++;
      return;
    }
    if (ch.size() > 3) throw input_error("vertex has more than three children");
    std::vector<int> cn;
    for (int c : ch) {
      walk(c);
      cn.push_back(num[c]);
    }
    std::sort(cn.begin(), cn.end());
    num[v] = cn.size() == 2 ? cn[1] : cn[cn.size() / 2];
  };
  walk(t.root);
  num[m] = num[t.root];
  return num;
}

struct EmbeddedGadget {
  int tree_size = 0;  // m
  int N = 0;          // m + 1
  std::vector<int> number;          // n(v) over T' (s is id m)
  std::vector<Point> tree_points;   // embedding of T' vertices
  // chain[v] = groups W_v^1 .. W_v^{2N-1}, v for tree vertex v (2N groups)
  std::vector<std::vector<int>> chain;
  std::vector<std::vector<int>> groups;  // co-located images per group
  std::vector<int> group_of;             // gadget vertex -> group
  std::vector<int> group_parent;         // previous group on the path, -1 for s
  PointSet points;
  int source = 0;  // the single image of s
  int source_group = 0;

  int subdivision_group(int v, int k) const { return chain.at(v).at(k - 1); }  // k in 1..2N-1
  int vertex_group(int v) const { return chain.at(v).back(); }
  const std::vector<int>& images(int v) const { return groups[vertex_group(v)]; }

  // Path-adjacent or co-located: the adjacency the construction intends.
  bool intended_adjacent(int a, int b) const {
    if (a == b) return false;
    const int ga = group_of[a], gb = group_of[b];
    return ga == gb || group_parent[ga] == gb || group_parent[gb] == ga;
  }

  Graph intended_graph() const {
    std::vector<std::pair<int, int>> e;
    const int n = static_cast<int>(points.size());
    for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
      const auto& mem = groups[g];
      for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j) e.emplace_back(mem[i], mem[j]);
      if (group_parent[g] >= 0)
        for (int a : mem)
          for (int b : groups[group_parent[g]]) e.emplace_back(a, b);
    }
    return Graph::from_edges(n, e);
  }
};

// Rectilinear embedding with unit-spaced subdivisions. s sits at (2 n(s), 0);
// child v of u sits at X_u + 2(n(u) - n(v)), Y_u + 2(N - |n(u) - n(v)|). The
// edge path runs horizontally from u first, then vertically up to v, so edges
// leaving the same parent only share u itself.
inline EmbeddedGadget embed_tree(const RootedTree& t) {
  EmbeddedGadget gd;
  const int m = t.size();
  gd.tree_size = m;
  gd.N = m + 1;
  gd.number = number_vertices(t);
  gd.tree_points.assign(m + 1, {});
  gd.chain.assign(m, {});
  const int s = m;
  const int N = gd.N;
  gd.tree_points[s] = {2.0 * gd.number[s], 0.0};

  auto add_group = [&](Point p, int copies, int parent_group) {
    const int g = static_cast<int>(gd.groups.size());
    gd.groups.emplace_back();
    gd.group_parent.push_back(parent_group);
    for (int c = 0; c < copies; ++c) {
      const int id = static_cast<int>(gd.points.size());
      gd.points.push_back(p);
      gd.group_of.push_back(g);
      gd.groups[g].push_back(id);
    }
    return g;
  };
  gd.source_group = add_group(gd.tree_points[s], 1, -1);
  gd.source = gd.groups[gd.source_group][0];

  std::function<void(int, int, int)> place = [&](int v, int u_tree, int u_group) {
    const Point pu = gd.tree_points[u_tree];
    const int delta = gd.number[u_tree] - gd.number[v];
    const int horiz = 2 * std::abs(delta);
    const int step_x = delta > 0 ? 1 : (delta < 0 ? -1 : 0);
    const Point pv{pu.x + 2.0 * delta, pu.y + 2.0 * (N - std::abs(delta))};
    gd.tree_points[v] = pv;
    int prev = u_group;
    for (int k = 1; k <= 2 * N; ++k) {
      Point p = k <= horiz ? Point{pu.x + step_x * k, pu.y}
                           : Point{pu.x + step_x * horiz, pu.y + (k - horiz)};
      const int copies = k == 1 ? 2 * N : 4 * N;
      prev = add_group(p, copies, prev);
      gd.chain[v].push_back(prev);
    }
    for (int c : t.children[v]) place(c, v, gd.chain[v].back());
  };
  place(t.root, s, gd.source_group);
  return gd;
}

struct GadgetInstance {
  EmbeddedGadget gadget;
  FirefighterInstance instance;
};

// Pairs whose unit-disk adjacency differs from the intended adjacency.
inline std::size_t adjacency_mismatches(const EmbeddedGadget& gd) {
  std::size_t bad = 0;
  const int n = static_cast<int>(gd.points.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (disks_touch(gd.points[a], gd.points[b]) != gd.intended_adjacent(a, b)) ++bad;
  return bad;
}

// The gadget as a disk instance; targets are all images of the vertices in gamma.
inline GadgetInstance build_gadget(const RootedTree& t, const vertex_set& gamma) {
  GadgetInstance out{embed_tree(t), {}};
  const auto& gd = out.gadget;
  for (int v : gamma)
    if (v < 0 || v >= t.size()) throw input_error("gamma vertex out of range");
  if (const auto bad = adjacency_mismatches(gd); bad != 0)
    throw internal_inconsistency("gadget embedding breaks unit-disk adjacency on " +
                                 std::to_string(bad) + " pairs");
  std::vector<int> targets;
  for (int v : gamma)
    for (int id : gd.images(v)) targets.push_back(id);
  out.instance = make_disk_instance(gd.points, gd.source, std::move(targets));
  return out;
}

// A tree protection of v at tree step tau becomes one image of W_v^1 per
// gadget step over steps 2N(tau-1)+1 .. 2N tau. Per-step load equals the
// number of tree protections at tau, so the budget carries over unchanged.
inline Schedule lift_strategy(const Schedule& tree_schedule, const EmbeddedGadget& gd) {
  const int window = 2 * gd.N;
  Schedule out;
  out.placements.assign(static_cast<std::size_t>(tree_schedule.steps()) * window, {});
  for (int tau = 1; tau <= tree_schedule.steps(); ++tau) {
    for (int v : tree_schedule.placements[tau - 1]) {
      if (v < 0 || v >= gd.tree_size) throw input_error("tree schedule names an unknown vertex");
      const auto& imgs = gd.groups[gd.subdivision_group(v, 1)];
      for (int j = 0; j < window; ++j) out.placements[(tau - 1) * window + j].push_back(imgs[j]);
    }
  }
  for (auto& p : out.placements) std::sort(p.begin(), p.end());
  while (!out.placements.empty() && out.placements.back().empty()) out.placements.pop_back();
  return out;
}

// All plane rooted trees with exactly m vertices under the degree limits of
// RootedTree (root <= 3 children, others <= 2), as parent arrays in preorder.
inline std::vector<RootedTree> enumerate_trees(int m) {
  // shapes[k][cap] = list of child-count preorder sequences for subtrees of size k
  std::function<std::vector<std::vector<int>>(int, int)> shapes = [&](int k, int cap) {
    std::vector<std::vector<int>> out;
    if (k == 1) {
      out.push_back({0});
      return out;
    }
    // ordered forests of c subtrees (each non-root cap 2) totalling k-1
    std::function<void(int, int, std::vector<int>&, int)> forest = [&](int left, int c,
                                                                       std::vector<int>& acc, int made) {
      if (left == 0) {
        if (made == c) {
          std::vector<int> seq{c};
          seq.insert(seq.end(), acc.begin(), acc.end());
          out.push_back(seq);
        }
        return;
      }
      if (made == c) return;
      for (int sz = 1; sz <= left; ++sz)
        for (const auto& sub : shapes(sz, 2)) {
          const auto mark = acc.size();
          acc.insert(acc.end(), sub.begin(), sub.end());
          forest(left - sz, c, acc, made + 1);
          acc.resize(mark);
        }
    };
    for (int c = 1; c <= cap; ++c) {
      std::vector<int> acc;
      forest(k - 1, c, acc, 0);
    }
    return out;
  };
  std::vector<RootedTree> trees;
  for (const auto& seq : shapes(m, 3)) {
    std::vector<int> parent(m, -1);
    std::vector<std::pair<int, int>> stack;  // (vertex, children still to attach)
    int next = 0;
    for (int c : seq) {
      const int v = next++;
      if (!stack.empty()) {
        parent[v] = stack.back().first;
        if (--stack.back().second == 0) stack.pop_back();
      }
      if (c > 0) stack.emplace_back(v, c);
    }
    trees.push_back(RootedTree::from_parents(parent));
  }
  return trees;
}

}  // namespace ff
