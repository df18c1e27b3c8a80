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

#ifndef REVASSIGN_BMATCHING_H_
#define REVASSIGN_BMATCHING_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "revassign/instance.h"
#include "revassign/matrix.h"

namespace revassign {

inline constexpr std::int64_t kDefaultCostScale = 1'000'000;

// Linear objective <W, X>. Weights may be negative. The solver works on
// round(w * cost_scale) (round half to even); optimality is with respect to
// those rounded weights.
struct WeightObjective {
  RealMatrix weights;
  std::int64_t cost_scale = kDefaultCostScale;
};

struct DegreeBounds {
  std::vector<int> min_reviews;  // l_i
  std::vector<int> max_reviews;  // u_i
  std::vector<int> capacity;     // U_j

  static DegreeBounds of(const ProblemInstance& inst) {
    return {inst.min_reviews, inst.max_reviews, inst.capacity};
  }
};

// Fixed-point weight as used by the solver. Throws std::overflow_error when
// the scaled value does not fit comfortably in 64 bits.
std::int64_t scaled_weight(double w, std::int64_t cost_scale);

// Exact maximizer of <round(W * scale), X> over binary X with
//   l_i <= sum_j X_ij <= u_i,  sum_i X_ij <= U_j,  X <= mask.
// Returns std::nullopt when no such X exists. Shape mismatches and
// l_i > u_i throw std::invalid_argument.
//
// The constraint matrix is totally unimodular, so the problem is solved
// exactly as a min-cost flow: source -> paper i -> reviewer j -> sink.
// Lower bounds l_i are enforced by routing l_i units of each paper's supply
// through a priority arc whose cost dominates every possible objective
// difference; the flow amount is otherwise free, so only profitable
// augmentations are taken past the lower bounds.
std::optional<Matching> solve_bmatching(const WeightObjective& objective,
                                        const EdgeMask& mask,
                                        const DegreeBounds& bounds);

// sum_ij w_ij X_ij in real (unscaled) weights.
double objective_value(const RealMatrix& weights, const Matching& x);

}  // namespace revassign

#endif  // REVASSIGN_BMATCHING_H_
