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

#include "revassign/heuristic.h"

#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "revassign/oracle.h"
#include "revassign/verify.h"

namespace revassign {
namespace {

using ::revassign::testing::edges;
using ::revassign::testing::pathological;
using ::revassign::testing::t2;

TEST(GreedyProposalTest, TopQualityPerColumn) {
  const auto inst = t2();
  const auto z = greedy_proposal(inst.quality, inst.capacity, inst.freedom);
  EXPECT_EQ(z, edges(4, 3, {{0, 0}, {1, 0}, {2, 0},  //
                            {1, 1}, {2, 1}, {3, 1},  //
                            {1, 2}, {2, 2}, {3, 2}}));
}

TEST(GreedyProposalTest, TiesGoToTheLowerIndex) {
  RealMatrix q(3, 1, 0.5);
  const std::vector<int> cap{1}, phi{1};
  EXPECT_EQ(greedy_proposal(q, cap, phi), edges(3, 1, {{0, 0}, {1, 0}}));
}

TEST(GreedyProposalTest, TooManyPapersRequested) {
  const auto inst = t2();
  const std::vector<int> phi{3, 0, 0};
  EXPECT_THROW(greedy_proposal(inst.quality, inst.capacity, phi),
               std::invalid_argument);
}

TEST(HeuristicSolveTest, SmallInstanceTriplet) {
  const auto inst = t2();
  const auto t = heuristic_solve(inst);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->bidding, edges(4, 3, {{0, 0}, {1, 0},  //
                                     {1, 1}, {2, 1},  //
                                     {2, 2}, {3, 2}}));
  EXPECT_EQ(t->assignment, edges(4, 3, {{0, 0}, {1, 0}, {2, 1}, {3, 2}}));
  EXPECT_NEAR(inner(inst.quality, t->assignment), 3.4, 1e-12);
  EXPECT_NEAR(t->bp_objective, 7.4, 1e-12);
  EXPECT_DOUBLE_EQ(t->accordance, 1.0);
  EXPECT_TRUE(check_triplet(inst, *t).empty());
}

TEST(HeuristicSolveTest, PathologicalInstanceIsInfeasible) {
  auto inst = pathological();
  EXPECT_FALSE(heuristic_solve(inst).has_value());
  inst.capacity = {2, 1};
  const auto t = heuristic_solve(inst);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(check_triplet(inst, *t).empty());
}

TEST(HeuristicSolveTest, NoFreedomMeansBidEqualsProposal) {
  auto inst = t2();
  inst.freedom = {0, 0, 0};
  const auto t = heuristic_solve(inst);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->bidding, t->proposal);
}

TEST(HeuristicSolveTest, NeverBeatsTheBilevelOptimum) {
  const auto inst = t2();
  const auto h = heuristic_solve(inst);
  const auto best = brute_force_bp_optimum(inst);
  ASSERT_TRUE(h && best);
  EXPECT_LE(h->bp_objective, best->bp_objective + 1e-9);
}

TEST(HeuristicSolveTest, TripletsAreAlwaysConsistent) {
  std::mt19937_64 rng(5);
  RandomInstanceSpec spec;
  spec.min_papers = 4;
  spec.max_papers = 12;
  spec.max_reviewers = 5;
  spec.max_capacity = 3;
  spec.max_freedom = 3;
  int feasible = 0;
  for (int c = 0; c < 300; ++c) {
    const auto inst = random_instance(rng, spec);
    const auto t = heuristic_solve(inst);
    if (!t) continue;
    ++feasible;
    const auto problems = check_triplet(inst, *t);
    EXPECT_TRUE(problems.empty()) << "case " << c << ": " << problems.front();
    EXPECT_GE(t->accordance, 0.0);
    EXPECT_LE(t->accordance, 1.0);
  }
  EXPECT_GT(feasible, 0);
}

TEST(CheckTripletTest, FlagsBrokenConsistency) {
  const auto inst = t2();
  auto t = *heuristic_solve(inst);
  // r1 was proposed p3 but did not bid on it: assigning it is forbidden.
  t.assignment(2, 0) = 1;
  EXPECT_FALSE(check_triplet(inst, t).empty());
}

TEST(AccordanceTest, Ratios) {
  const auto x = edges(2, 2, {{0, 0}, {1, 1}});
  const auto y = edges(2, 2, {{0, 0}});
  EXPECT_DOUBLE_EQ(accordance(x, y), 0.5);
  EXPECT_DOUBLE_EQ(accordance(Matching(2, 2), y), 1.0);
}

}  // namespace
}  // namespace revassign
