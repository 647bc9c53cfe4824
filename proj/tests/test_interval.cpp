#include <gtest/gtest.h>

#include "firefighter/corpus.hpp"
#include "firefighter/interval_solver.hpp"
#include "firefighter/oracle.hpp"
#include "firefighter/simulate.hpp"
#include "test_util.hpp"

using namespace ff;

TEST(LevelSets, ChainFarTargetSitsAtLevelFive) {
  const auto inst = make_interval_instance(test::interval_chain(6), 0, {5});
  const auto levels = level_sets(inst);
  ASSERT_EQ(levels.size(), 5u);
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(levels[i].targets.empty());
  EXPECT_EQ(levels[4].targets, (vertex_set{5}));
  EXPECT_EQ(levels[4].protect_bound, 1);
  EXPECT_EQ(bfs_layers(inst.graph, 0)[5], 5);
}

TEST(LevelSets, BothNeighboursAtLevelOne) {
  const auto inst = make_interval_instance(test::interval_chain(5), 2, {1, 3});
  const auto levels = level_sets(inst);
  ASSERT_FALSE(levels.empty());
  EXPECT_EQ(levels[0].targets, (vertex_set{1, 3}));
  EXPECT_EQ(levels[0].protect_bound, 2);
}

TEST(LevelSets, NoTargetsNoLevels) {
  EXPECT_TRUE(level_sets(make_interval_instance(test::interval_chain(4), 0, {})).empty());
}

TEST(LevelSets, SourceTargetIsInfeasible) {
  EXPECT_THROW(level_sets(make_interval_instance(test::interval_chain(4), 0, {0})), infeasible_error);
}

TEST(LevelSets, LaterLevelsUseTheResidualGraph) {
  // Protecting target 1 pushes target 2's distance past its plain BFS value.
  const auto inst = make_interval_instance({{0, 1}, {0.9, 1}, {1.8, 1}, {0.5, 1}, {1.4, 1}}, 0, {1, 2});
  const auto levels = level_sets(inst);
  const auto plain = bfs_layers(inst.graph, 0);
  int level_of_2 = 0;
  for (const auto& l : levels)
    if (contains(l.targets, 2)) level_of_2 = l.level;
  EXPECT_GE(level_of_2, plain[2]);
}

TEST(SolveInterval, ChainFarTargetBudgetOne) {
  const auto inst = make_interval_instance(test::interval_chain(6), 0, {5});
  const auto s = solve_interval(inst);
  EXPECT_EQ(s.budget, 1);
  EXPECT_EQ(min_budget(inst), 1);
  EXPECT_TRUE(check_saves(inst, s.schedule, s.budget));
}

TEST(SolveInterval, InteriorSourceBothNeighboursBudgetTwo) {
  const auto inst = make_interval_instance(test::interval_chain(5), 2, {1, 3});
  EXPECT_EQ(solve_interval(inst).budget, 2);
  EXPECT_FALSE(saveable(inst, 1));
  EXPECT_EQ(min_budget(inst), 2);
}

TEST(SolveInterval, ThreeConsecutiveFarTargets) {
  const auto inst = make_interval_instance(test::interval_chain(8), 0, {5, 6, 7});
  const auto s = solve_interval(inst);
  EXPECT_EQ(s.budget, 1);
  EXPECT_EQ(min_budget(inst), 1);
  EXPECT_TRUE(check_saves(inst, s.schedule, 1));
}

TEST(SolveInterval, NoTargetsBudgetZero) {
  const auto s = solve_interval(make_interval_instance(test::interval_chain(4), 1, {}));
  EXPECT_EQ(s.budget, 0);
  EXPECT_TRUE(s.schedule.placements.empty());
  EXPECT_TRUE(s.diagnostics.empty());
}

TEST(SolveInterval, RejectsNonUnitIntervals) {
  EXPECT_THROW(solve_interval(make_interval_instance({{0, 1}, {0.5, 2}}, 0, {1})), input_error);
}

TEST(SolveInterval, SourceTargetIsInfeasible) {
  EXPECT_THROW(solve_interval(make_interval_instance(test::interval_chain(3), 0, {0})), infeasible_error);
}

TEST(SolveInterval, CutProtectsEverythingBeyondIt) {
  // Source at the left end of a chain, a burst of targets far right: cutting
  // the chain once beats protecting each target.
  IntervalSet ivs = test::interval_chain(4);
  for (int k = 0; k < 5; ++k) ivs.push_back({3.0 + 0.05 * k, 1.0});
  const auto inst = make_interval_instance(ivs, 0, {4, 5, 6, 7, 8});
  const auto s = solve_interval(inst);
  EXPECT_EQ(s.kind, strategy_kind::cut_at_level);
  EXPECT_EQ(s.budget, 1);
  EXPECT_EQ(min_budget(inst), 1);
  EXPECT_TRUE(check_saves(inst, s.schedule, 1));
}

TEST(SolveInterval, EverySolutionSimulates) {
  for (int i = 0; i < 150; ++i) {
    const auto inst = corpus_instance(corpus_kind::interval, 21, i, 12);
    const auto s = solve_interval(inst);
    EXPECT_TRUE(check_saves(inst, s.schedule, s.budget)) << i;
    EXPECT_LE(s.schedule.max_per_step(), s.budget);
  }
}

TEST(SolveInterval, NeverBelowOptimum) {
  for (int i = 0; i < 150; ++i) {
    const auto inst = corpus_instance(corpus_kind::interval, 22, i, 10);
    EXPECT_GE(solve_interval(inst).budget, min_budget(inst)) << i;
  }
}

TEST(ChooseStrategy, TieBetweenBoundsProtectsTargets) {
  LevelDiagnostics levels(2);
  levels[0] = {1, {3}, {1, 2}, 1, 1, 2};
  levels[1] = {2, {4}, {4}, 2, 1, 1};
  const auto c = choose_strategy(levels);
  EXPECT_EQ(c.kind, strategy_kind::protect_targets);
  EXPECT_EQ(c.budget, 1);
  EXPECT_EQ(c.protect, (deadline_map{{3, 1}, {4, 2}}));
}

TEST(ChooseStrategy, CutsAtTheFirstCheapestLevel) {
  LevelDiagnostics levels(3);
  levels[0] = {1, {}, {1, 2}, 0, 0, 2};
  levels[1] = {2, {}, {5}, 0, 0, 1};
  levels[2] = {3, {6, 7, 8, 9}, {6}, 4, 2, 1};
  const auto c = choose_strategy(levels);
  EXPECT_EQ(c.kind, strategy_kind::cut_at_level);
  EXPECT_EQ(c.cut_level, 2);
  EXPECT_EQ(c.budget, 1);
  EXPECT_EQ(c.protect, (deadline_map{{5, 2}}));
}
