#include <gtest/gtest.h>

#include "firefighter/generators.hpp"
#include "firefighter/io.hpp"

using namespace ff;

namespace {

std::string where_of(const std::string& text) {
  try {
    io::parse_instance_text(text);
  } catch (const parse_error& e) {
    return e.where;
  }
  return "<no error>";
}

}  // namespace

TEST(ParseInstance, MinimalPointsFile) {
  const auto inst = io::parse_instance_text(
      R"({"format": "firefighter-instance", "version": 1, "kind": "points", "points": [[0, 0]], "source": 0, "targets": []})");
  EXPECT_EQ(inst.size(), 1);
  EXPECT_TRUE(inst.targets.empty());
  ASSERT_TRUE(inst.points());
  EXPECT_EQ(inst.threshold, 1.0);
}

TEST(ParseInstance, DanglingTargetId) {
  EXPECT_EQ(where_of(R"({"format": "firefighter-instance", "version": 1, "kind": "points",
                         "points": [[0, 0], [1, 0]], "source": 0, "targets": [1, 2]})"),
            "/targets/1");
}

TEST(ParseInstance, FieldErrorsNameTheField) {
  const std::string head = R"({"format": "firefighter-instance", "version": 1, )";
  EXPECT_EQ(where_of(head + R"("kind": "intervals", "intervals": [[0, 1], [0.5, 2]], "source": 0, "targets": []})"),
            "/intervals/1/1");
  EXPECT_EQ(where_of(head + R"("kind": "points", "points": [[0, "a"]], "source": 0, "targets": []})"),
            "/points/0/1");
  EXPECT_EQ(where_of(head + R"("kind": "points", "points": [[0, 0]], "source": 3, "targets": []})"), "/source");
  EXPECT_EQ(where_of(head + R"("kind": "points", "points": [[0, 0]], "targets": []})"), "/source");
  EXPECT_EQ(where_of(head + R"("kind": "graph", "vertices": 2, "edges": [[0, 2]], "source": 0, "targets": []})"),
            "/edges/0/1");
  EXPECT_EQ(where_of(head + R"("kind": "hexagons", "source": 0, "targets": []})"), "/kind");
  EXPECT_EQ(where_of(R"({"format": "firefighter-instance", "version": 9})"), "/version");
  EXPECT_EQ(where_of(R"({"format": "nope"})"), "/format");
  EXPECT_EQ(where_of("[1, 2"), "<input>");
}

TEST(ParseInstance, GraphKind) {
  const auto inst = io::parse_instance_text(
      R"({"format": "firefighter-instance", "version": 1, "kind": "graph", "vertices": 3,
          "edges": [[0, 1], [1, 2]], "source": 0, "targets": [2]})");
  EXPECT_EQ(inst.graph.edge_count(), 2u);
  EXPECT_EQ(inst.targets, (vertex_set{2}));
}

TEST(ParseInstance, IdsFollowFileOrder) {
  const auto inst = io::parse_instance_text(
      R"({"format": "firefighter-instance", "version": 1, "kind": "points",
          "points": [[5, 5], [0, 0], [0.5, 0]], "source": 1, "targets": [2]})");
  EXPECT_EQ((*inst.points())[0], (Point{5, 5}));
  EXPECT_TRUE(inst.graph.adjacent(1, 2));
  EXPECT_EQ(inst.graph.degree(0), 0);
}

TEST(ParseInstance, RoundTripIsCanonical) {
  seeded_rng rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    GeneratorConfig cfg;
    cfg.n = 9;
    for (const auto& inst : {random_disk_instance(rng, cfg), random_interval_instance(rng, cfg)}) {
      const std::string once = io::dump(io::instance_to_json(inst));
      const auto back = io::parse_instance_text(once);
      EXPECT_EQ(back.graph, inst.graph);
      EXPECT_EQ(back.targets, inst.targets);
      EXPECT_EQ(io::dump(io::instance_to_json(back)), once);
    }
  }
}

TEST(ParseInstance, UnsortedTargetsNormalise) {
  const auto inst = io::parse_instance_text(
      R"({"format": "firefighter-instance", "version": 1, "kind": "points",
          "points": [[0, 0], [1, 0], [2, 0]], "source": 0, "targets": [2, 1, 2]})");
  EXPECT_EQ(inst.targets, (vertex_set{1, 2}));
}

TEST(ParseSchedule, BareArrayOrObject) {
  EXPECT_EQ(io::schedule_from_json(io::json::parse("[[3, 1], [], [2]]")).placements,
            (std::vector<vertex_set>{{1, 3}, {}, {2}}));
  EXPECT_EQ(io::schedule_from_json(io::json::parse(R"({"schedule": [[0]]})")).placements,
            (std::vector<vertex_set>{{0}}));
  EXPECT_THROW(io::schedule_from_json(io::json::parse(R"({"steps": []})")), parse_error);
  EXPECT_THROW(io::schedule_from_json(io::json::parse("[[1.5]]")), parse_error);
}

TEST(ParseTree, ValidAndInvalid) {
  const auto tf = io::tree_from_json(io::json::parse(R"({"format": "rooted-tree", "version": 1, "parent": [-1, 0, 0], "gamma": [2]})"));
  EXPECT_EQ(tf.tree.size(), 3);
  EXPECT_EQ(tf.gamma, (vertex_set{2}));
  EXPECT_THROW(io::tree_from_json(io::json::parse(R"({"format": "rooted-tree", "parent": [1, 0]})")), parse_error);
  EXPECT_THROW(io::tree_from_json(io::json::parse(R"({"format": "rooted-tree", "parent": [-1], "gamma": [4]})")),
               parse_error);
  const auto again = io::tree_from_json(io::tree_to_json(tf.tree, tf.gamma));
  EXPECT_EQ(again.tree.parent, tf.tree.parent);
}

TEST(ParseInstance, MissingFile) {
  EXPECT_THROW(io::parse_instance("/nonexistent/instance.json"), parse_error);
}

#include <filesystem>

#include "firefighter/interval_solver.hpp"
#include "firefighter/simulate.hpp"
#include "firefighter/udg_solver.hpp"

TEST(Fixtures, LoadAndStayFeasible) {
  int seen = 0;
  for (const auto& e : std::filesystem::directory_iterator(FF_FIXTURE_DIR)) {
    if (e.path().extension() != ".json") continue;
    ++seen;
    const auto inst = io::parse_instance(e.path().string());
    if (inst.intervals()) {
      const auto s = solve_interval(inst);
      EXPECT_TRUE(check_saves(inst, s.schedule, s.budget)) << e.path();
    } else {
      const auto s = solve_udg(inst);
      EXPECT_TRUE(check_saves(inst, s.schedule, s.budget)) << e.path();
    }
  }
  EXPECT_GT(seen, 0);
}
