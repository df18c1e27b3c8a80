// Copyright 2026 The revassign Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revassign/bmatching.h"

#include <cstdint>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "revassign/oracle.h"
#include "revassign/verify.h"

namespace revassign {
namespace {

using ::revassign::testing::edges;
using ::revassign::testing::t1;

std::optional<Matching> solve_full(const ProblemInstance& inst,
                                   const RealMatrix& w) {
  return solve_bmatching({w, kDefaultCostScale},
                         EdgeMask::full(inst.n, inst.m),
                         DegreeBounds::of(inst));
}

TEST(ScaledWeightTest, RoundsHalfToEven) {
  EXPECT_EQ(scaled_weight(0.5, 1), 0);
  EXPECT_EQ(scaled_weight(1.5, 1), 2);
  EXPECT_EQ(scaled_weight(-2.5, 1), -2);
  EXPECT_EQ(scaled_weight(0.123456, kDefaultCostScale), 123456);
}

TEST(ScaledWeightTest, RejectsHugeAndBadScale) {
  EXPECT_THROW(scaled_weight(1e300, kDefaultCostScale), std::overflow_error);
  EXPECT_THROW(scaled_weight(1.0, 0), std::invalid_argument);
}

TEST(SolveBMatchingTest, SmallKnownOptimum) {
  const auto inst = t1();
  const auto x = solve_full(inst, inst.quality);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, edges(3, 2, {{0, 0}, {1, 0}, {2, 1}}));
  EXPECT_NEAR(objective_value(inst.quality, *x), 2.3, 1e-12);
}

TEST(SolveBMatchingTest, InfeasibleWhenDemandExceedsCapacity) {
  auto inst = t1();
  inst.capacity = {1, 1};
  EXPECT_FALSE(solve_full(inst, inst.quality).has_value());
}

TEST(SolveBMatchingTest, InfeasibleWhenMaskStarvesAPaper) {
  const auto inst = t1();
  EdgeMask mask = EdgeMask::full(3, 2);
  mask(1, 0) = 0;
  mask(1, 1) = 0;
  EXPECT_FALSE(solve_bmatching({inst.quality}, mask, DegreeBounds::of(inst))
                   .has_value());
}

TEST(SolveBMatchingTest, LowerBoundsBeatNegativeWeights) {
  auto inst = t1();
  RealMatrix w(3, 2, -1.0);
  const auto x = solve_full(inst, w);
  ASSERT_TRUE(x.has_value());
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(x->row_sum(i), 1u);
}

TEST(SolveBMatchingTest, FreeAmountSkipsUnprofitableEdges) {
  auto inst = t1();
  inst.min_reviews = {0, 0, 0};
  inst.max_reviews = {2, 2, 2};
  RealMatrix w(3, 2, {0.5, -0.1, -0.2, 0.0, -0.3, 0.4});
  const auto x = solve_full(inst, w);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, edges(3, 2, {{0, 0}, {2, 1}}));
}

TEST(SolveBMatchingTest, ShapeAndBoundErrors) {
  const auto inst = t1();
  EXPECT_THROW(solve_bmatching({RealMatrix(2, 2)}, EdgeMask::full(3, 2),
                               DegreeBounds::of(inst)),
               std::invalid_argument);
  auto bad = DegreeBounds::of(inst);
  bad.min_reviews[0] = 2;
  EXPECT_THROW(solve_bmatching({inst.quality}, EdgeMask::full(3, 2), bad),
               std::invalid_argument);
}

TEST(SolveBMatchingTest, MatchesBruteForce) {
  std::mt19937_64 rng(7);
  RandomInstanceSpec spec;
  spec.max_papers = 5;
  spec.max_reviewers = 3;
  for (int c = 0; c < 200; ++c) {
    const auto inst = random_instance(rng, spec);
    const auto mask = EdgeMask::full(inst.n, inst.m);
    const auto bounds = DegreeBounds::of(inst);
    const auto x = solve_bmatching({inst.quality}, mask, bounds);
    const auto oracle = brute_force_best_matching(inst.quality, mask, bounds);
    ASSERT_EQ(x.has_value(), oracle.has_value()) << "case " << c;
    if (x) EXPECT_EQ(scaled_objective(inst.quality, *x), oracle->scaled_value);
  }
}

TEST(SolveBMatchingTest, ShrinkingTheMaskNeverHelps) {
  std::mt19937_64 rng(11);
  RandomInstanceSpec spec;
  spec.min_papers = 3;
  spec.max_papers = 8;
  spec.max_reviewers = 4;
  std::bernoulli_distribution keep(0.7);
  for (int c = 0; c < 200; ++c) {
    const auto inst = random_instance(rng, spec);
    const auto bounds = DegreeBounds::of(inst);
    const auto full = solve_bmatching({inst.quality},
                                      EdgeMask::full(inst.n, inst.m), bounds);
    EdgeMask mask(inst.n, inst.m);
    for (auto& v : mask.data()) v = keep(rng) ? 1 : 0;
    const auto sub = solve_bmatching({inst.quality}, mask, bounds);
    if (!sub) continue;
    ASSERT_TRUE(full.has_value());
    EXPECT_TRUE(sub->dominated_by(mask));
    EXPECT_LE(scaled_objective(inst.quality, *sub),
              scaled_objective(inst.quality, *full));
  }
}

TEST(SolveBMatchingTest, PositiveRescalingKeepsTheOptimumValue) {
  std::mt19937_64 rng(13);
  RandomInstanceSpec spec;
  spec.max_papers = 8;
  spec.max_reviewers = 4;
  spec.integer_weights = true;
  for (int c = 0; c < 100; ++c) {
    const auto inst = random_instance(rng, spec);
    RealMatrix scaled = inst.quality;
    for (auto& v : scaled.data()) v *= 4.0;
    const auto a = solve_full(inst, inst.quality);
    const auto b = solve_full(inst, scaled);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_DOUBLE_EQ(4.0 * objective_value(inst.quality, *a),
                       objective_value(scaled, *b));
    }
  }
}

TEST(SolveBMatchingTest, UniqueOptimumIsReturned) {
  // Distinct powers of two make every matching's value distinct.
  ProblemInstance inst = t1();
  inst.quality = RealMatrix(3, 2, {1.0 / 2, 1.0 / 4, 1.0 / 8, 1.0 / 16,
                                   1.0 / 32, 1.0 / 64});
  const auto x = solve_full(inst, inst.quality);
  const auto oracle = brute_force_best_matching(
      inst.quality, EdgeMask::full(3, 2), DegreeBounds::of(inst));
  ASSERT_TRUE(x && oracle);
  EXPECT_EQ(*x, oracle->best);
}

}  // namespace
}  // namespace revassign
