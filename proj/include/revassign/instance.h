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

#ifndef REVASSIGN_INSTANCE_H_
#define REVASSIGN_INSTANCE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "revassign/matrix.h"

namespace revassign {

// Papers are rows [0, n), reviewers are columns [0, m). Reports and files use
// 1-based ids.
struct ProblemInstance {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<int> min_reviews;  // l_i
  std::vector<int> max_reviews;  // u_i
  std::vector<int> capacity;     // U_j: review capacity and bid size
  std::vector<int> freedom;      // phi_j: proposed papers j may refuse
  RealMatrix quality;            // W_E, editor's view, nonnegative
  RealMatrix effort;             // W_R, reviewers' view, strictly positive

  friend bool operator==(const ProblemInstance&,
                         const ProblemInstance&) = default;
};

struct Violation {
  std::string code;     // e.g. "min_exceeds_max"
  std::string message;  // human readable, 1-based ids
};

// Report-style validation: every broken invariant is listed; empty = valid.
std::vector<Violation> validate_instance(const ProblemInstance& inst);

// max_j phi_j + 2 max_j U_j <= n: a feasible bilevel triplet exists.
bool theorem3_check(const ProblemInstance& inst);

// Sufficient condition for the greedy heuristic to stay feasible. With
// K = max phi + max U and L = sum l, every paper must have at least L
// reviewers for which it is neither among the K highest-quality papers nor
// among the K lowest-effort papers of that reviewer's column.
bool theorem4_check(const ProblemInstance& inst);

}  // namespace revassign

#endif  // REVASSIGN_INSTANCE_H_
