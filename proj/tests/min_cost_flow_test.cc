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

#include "revassign/min_cost_flow.h"

#include <stdexcept>

#include <gtest/gtest.h>

namespace revassign {
namespace {

TEST(MinCostFlowTest, EmptyNetwork) {
  MinCostFlow g(2);
  const auto r = g.solve(0, 1);
  EXPECT_EQ(r.flow, 0);
  EXPECT_EQ(r.cost, 0);
}

TEST(MinCostFlowTest, TakesOnlyProfitablePaths) {
  // 0 -> 1 -> 3 costs -5, 0 -> 2 -> 3 costs +2: only the first is used.
  MinCostFlow g(4);
  const auto a = g.add_arc(0, 1, 3, -2);
  g.add_arc(1, 3, 3, -3);
  const auto b = g.add_arc(0, 2, 4, 1);
  g.add_arc(2, 3, 4, 1);
  const auto r = g.solve(0, 3);
  EXPECT_EQ(r.flow, 3);
  EXPECT_EQ(r.cost, -15);
  EXPECT_EQ(g.flow_on(a), 3);
  EXPECT_EQ(g.flow_on(b), 0);
}

TEST(MinCostFlowTest, ZeroCostPathIsNotTaken) {
  MinCostFlow g(3);
  const auto a = g.add_arc(0, 1, 5, 0);
  g.add_arc(1, 2, 5, 0);
  const auto r = g.solve(0, 2);
  EXPECT_EQ(r.flow, 0);
  EXPECT_EQ(g.flow_on(a), 0);
}

TEST(MinCostFlowTest, ReroutesThroughResidualArcs) {
  // Classic crossing network: the greedy first path must be partly undone.
  //   0 -> 1 (1, -10), 0 -> 2 (1, -1)
  //   1 -> 3 (1, -1),  1 -> 4 (1, 0)
  //   2 -> 3 (1, -8)
  //   3 -> 5 (1, 0),   4 -> 5 (1, 0)
  MinCostFlow g(6);
  g.add_arc(0, 1, 1, -10);
  g.add_arc(0, 2, 1, -1);
  const auto a13 = g.add_arc(1, 3, 1, -1);
  const auto a14 = g.add_arc(1, 4, 1, 0);
  const auto a23 = g.add_arc(2, 3, 1, -8);
  g.add_arc(3, 5, 1, 0);
  g.add_arc(4, 5, 1, 0);
  const auto r = g.solve(0, 5);
  EXPECT_EQ(r.flow, 2);
  EXPECT_EQ(r.cost, -19);
  EXPECT_EQ(g.flow_on(a13), 0);
  EXPECT_EQ(g.flow_on(a14), 1);
  EXPECT_EQ(g.flow_on(a23), 1);
}

TEST(MinCostFlowTest, ParallelArcs) {
  MinCostFlow g(2);
  const auto cheap = g.add_arc(0, 1, 2, -4);
  const auto dear = g.add_arc(0, 1, 2, -1);
  const auto r = g.solve(0, 1);
  EXPECT_EQ(r.flow, 4);
  EXPECT_EQ(r.cost, -10);
  EXPECT_EQ(g.flow_on(cheap), 2);
  EXPECT_EQ(g.flow_on(dear), 2);
}

TEST(MinCostFlowTest, RejectsBackwardArcs) {
  MinCostFlow g(3);
  EXPECT_THROW(g.add_arc(2, 1, 1, 0), std::invalid_argument);
  EXPECT_THROW(g.add_arc(1, 1, 1, 0), std::invalid_argument);
  EXPECT_THROW(g.add_arc(0, 1, -1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace revassign
