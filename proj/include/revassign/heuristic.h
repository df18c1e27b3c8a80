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

#ifndef REVASSIGN_HEURISTIC_H_
#define REVASSIGN_HEURISTIC_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revassign/bmatching.h"
#include "revassign/instance.h"
#include "revassign/matrix.h"

namespace revassign {

// A bilevel solution: proposal Z, bidding Y, final assignment X.
struct BpTriplet {
  Matching assignment;  // X
  Matching bidding;     // Y
  Matching proposal;    // Z
  double bp_objective = 0.0;  // <W_E, X> + <Y, X>
  double accordance = 1.0;    // <X, Y> / <X, X>
};

// Checks every structural invariant of a triplet against the instance and
// returns the violated ones (empty when the triplet is feasible).
std::vector<std::string> check_triplet(const ProblemInstance& inst,
                                       const BpTriplet& triplet);

// Column j proposes the U_j + phi_j papers of highest quality. Throws
// std::invalid_argument when U_j + phi_j > n.
Matching greedy_proposal(const RealMatrix& quality, std::span<const int> capacity,
                         std::span<const int> freedom);

// Greedy heuristic: Z = greedy_proposal, Y = bid_all(Z), X = b-matching on
// W_E + Y restricted to E - Z + Y. Returns std::nullopt when the final
// matching problem is infeasible.
std::optional<BpTriplet> heuristic_solve(
    const ProblemInstance& inst, std::int64_t cost_scale = kDefaultCostScale);

// <X, Y> / <X, X>. An empty X is vacuously perfect and yields 1.0.
double accordance(const Matching& assignment, const Matching& bidding);

}  // namespace revassign

#endif  // REVASSIGN_HEURISTIC_H_
