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

// Small hand-checked instances shared by the unit tests.

#ifndef REVASSIGN_TESTS_FIXTURES_H_
#define REVASSIGN_TESTS_FIXTURES_H_

#include <vector>

#include "revassign/instance.h"
#include "revassign/matrix.h"

namespace revassign::testing {

// 3 papers, 2 reviewers, one review per paper, capacity 2.
inline ProblemInstance t1() {
  ProblemInstance inst;
  inst.n = 3;
  inst.m = 2;
  inst.min_reviews = {1, 1, 1};
  inst.max_reviews = {1, 1, 1};
  inst.capacity = {2, 2};
  inst.freedom = {0, 0};
  inst.quality = RealMatrix(3, 2, {0.9, 0.3, 0.6, 0.5, 0.1, 0.8});
  inst.effort = RealMatrix(3, 2, 1.0);
  return inst;
}

// 4 papers, 3 reviewers, U = 2 and phi = 1 everywhere.
inline ProblemInstance t2() {
  ProblemInstance inst;
  inst.n = 4;
  inst.m = 3;
  inst.min_reviews = {1, 1, 1, 1};
  inst.max_reviews = {1, 1, 1, 1};
  inst.capacity = {2, 2, 2};
  inst.freedom = {1, 1, 1};
  inst.quality = RealMatrix(4, 3, {0.9, 0.2, 0.1,  //
                                   0.8, 0.7, 0.2,  //
                                   0.2, 0.9, 0.6,  //
                                   0.1, 0.3, 0.8});
  inst.effort = RealMatrix(4, 3, {1, 5, 5,  //
                                  2, 1, 4,  //
                                  5, 2, 1,  //
                                  4, 4, 2});
  return inst;
}

// Both reviewers rank p1 worst; with phi = (1, 1) nobody bids for it.
inline ProblemInstance pathological() {
  ProblemInstance inst;
  inst.n = 3;
  inst.m = 2;
  inst.min_reviews = {1, 1, 1};
  inst.max_reviews = {1, 1, 1};
  inst.capacity = {2, 2};
  inst.freedom = {1, 1};
  inst.quality = RealMatrix(3, 2, {0.9, 0.1, 0.5, 0.8, 0.3, 0.7});
  inst.effort = RealMatrix(3, 2, {11, 3, 10, 2, 1, 1});
  return inst;
}

inline Matching edges(std::size_t n, std::size_t m,
                      std::vector<Edge> list) {
  return Matching::from_edges(n, m, list);
}

}  // namespace revassign::testing

#endif  // REVASSIGN_TESTS_FIXTURES_H_
