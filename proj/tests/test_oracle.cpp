#include <gtest/gtest.h>

#include "firefighter/corpus.hpp"
#include "firefighter/oracle.hpp"
#include "firefighter/simulate.hpp"
#include "test_util.hpp"

using namespace ff;

TEST(Oracle, StarNeedsOnePerLeaf) {
  const auto inst = make_instance(test::star_graph(3), 0, {1, 2, 3});
  EXPECT_FALSE(saveable(inst, 2));
  EXPECT_TRUE(saveable(inst, 3));
  EXPECT_EQ(min_budget(inst), 3);
}

TEST(Oracle, PathFarEnd) {
  const auto inst = make_instance(test::path_graph(3), 0, {2});
  EXPECT_TRUE(saveable(inst, 1));
  EXPECT_FALSE(saveable(inst, 0));
}

TEST(Oracle, NoTargetsBudgetZero) {
  EXPECT_EQ(min_budget(make_instance(test::cycle_graph(5), 0, {})), 0);
}

TEST(Oracle, SourceTarget) {
  const auto inst = make_instance(test::path_graph(3), 0, {0});
  EXPECT_FALSE(saveable(inst, 5));
  EXPECT_FALSE(saveable_witness(inst, 5));
  EXPECT_THROW(min_budget(inst), infeasible_error);
}

TEST(Oracle, StateLimitRaisesResourceError) {
  const auto inst = corpus_instance(corpus_kind::disk, 3, 0, 14, 14);
  OracleOptions tiny;
  tiny.max_states = 1;
  if (!inst.targets.empty() && inst.graph.degree(inst.source) > 0)
    EXPECT_THROW(
        {
          for (int b = 0; b <= inst.graph.degree(inst.source); ++b) saveable(inst, b, tiny);
        },
        resource_error);
  EXPECT_THROW(saveable(make_instance(test::path_graph(65), 0, {64}), 1), resource_error);
}

TEST(Oracle, WholeNeighbourhoodAlwaysSuffices) {
  for (int i = 0; i < 60; ++i) {
    const auto inst = corpus_instance(corpus_kind::disk, 41, i, 12);
    EXPECT_TRUE(saveable(inst, inst.graph.degree(inst.source))) << i;
  }
}

TEST(Oracle, MonotoneInBudget) {
  for (int i = 0; i < 60; ++i) {
    const auto inst = corpus_instance(corpus_kind::disk, 42, i, 11);
    const int b = min_budget(inst);
    for (int k = 0; k <= inst.graph.degree(inst.source); ++k) EXPECT_EQ(saveable(inst, k), k >= b) << i;
  }
}

TEST(Oracle, WitnessSimulates) {
  for (int i = 0; i < 80; ++i) {
    const auto inst = corpus_instance(corpus_kind::interval, 43, i, 12);
    const int b = min_budget(inst);
    const auto w = saveable_witness(inst, b);
    ASSERT_TRUE(w) << i;
    EXPECT_TRUE(check_saves(inst, *w, b)) << i;
    if (b > 0) EXPECT_FALSE(saveable_witness(inst, b - 1)) << i;
  }
}

TEST(Oracle, AgreesWithExhaustiveSearch) {
  for (int i = 0; i < 80; ++i)
    for (corpus_kind k : {corpus_kind::disk, corpus_kind::interval}) {
      const auto inst = corpus_instance(k, 44, i, 7);
      for (int b = 0; b <= inst.graph.degree(inst.source); ++b)
        EXPECT_EQ(saveable(inst, b), saveable_exhaustive(inst, b)) << i << " b=" << b;
    }
}

TEST(Oracle, SymmetryDoesNotChangeAnswers) {
  OracleOptions plain;
  plain.use_symmetry = false;
  for (int i = 0; i < 60; ++i) {
    const auto inst = corpus_instance(corpus_kind::disk, 45, i, 12);
    EXPECT_EQ(min_budget(inst), min_budget(inst, plain)) << i;
  }
}

TEST(Oracle, CoLocatedImagesCountSeparately) {
  // Two targeted copies at the same point next to the source.
  const auto inst = make_disk_instance({{0, 0}, {1, 0}, {1, 0}, {2, 0}}, 0, {1, 2});
  EXPECT_EQ(min_budget(inst), 2);
  EXPECT_EQ(min_budget(make_disk_instance({{0, 0}, {1, 0}, {1, 0}, {2, 0}}, 0, {3})), 1);
}
