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

// Exhaustive ground truth for tiny instances. Nothing in here calls the
// flow solver or the heuristic, so it can be used to check both.

#ifndef REVASSIGN_ORACLE_H_
#define REVASSIGN_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "revassign/bmatching.h"
#include "revassign/heuristic.h"
#include "revassign/instance.h"
#include "revassign/matrix.h"

namespace revassign {

struct EnumerationGuard {
  std::uint64_t max_candidates = 1'000'000;
};

class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// prod_i sum_{s=l_i}^{u_i} C(allowed_i, s), saturating at UINT64_MAX.
std::uint64_t matching_search_space(const DegreeBounds& bounds,
                                    const EdgeMask& mask);

// Calls `visit` once per binary X with l <= row sums <= u, column sums <= U
// and X <= mask. Throws GuardError when the search space exceeds the guard.
void for_each_feasible_matching(
    const DegreeBounds& bounds, const EdgeMask& mask,
    const std::function<void(const Matching&)>& visit,
    EnumerationGuard guard = {});

std::vector<Matching> enumerate_feasible_matchings(const DegreeBounds& bounds,
                                                   const EdgeMask& mask,
                                                   EnumerationGuard guard = {});

// sum of round(w * scale) over the edges of X: exact objective comparison.
std::int64_t scaled_objective(const RealMatrix& weights, const Matching& x,
                              std::int64_t cost_scale = kDefaultCostScale);

struct BruteForceOptimum {
  Matching best;                // first optimum in enumeration order
  std::int64_t scaled_value = 0;
  std::size_t feasible_count = 0;
};

// Best <round(W * scale), X> by enumeration; std::nullopt if infeasible.
std::optional<BruteForceOptimum> brute_force_best_matching(
    const RealMatrix& weights, const EdgeMask& mask, const DegreeBounds& bounds,
    std::int64_t cost_scale = kDefaultCostScale, EnumerationGuard guard = {});

// Every effort-minimal bid of `capacity` papers out of a proposal column,
// as ascending index lists. Several are returned only when efforts tie.
std::vector<std::vector<std::size_t>> optimal_bid_sets(
    std::span<const std::uint8_t> proposal_col,
    std::span<const double> effort_col, int capacity);

// Exact bilevel optimum over all proposals Z with column sums U + phi, every
// optimal follower response (optimistic convention under ties) and every
// feasible final assignment. std::nullopt when no (Z, Y) admits a feasible X.
std::optional<BpTriplet> brute_force_bp_optimum(const ProblemInstance& inst,
                                                EnumerationGuard guard = {});

// Whether any (Z, Y, X) triplet is feasible; stops at the first one.
bool brute_force_bp_feasible(const ProblemInstance& inst,
                             EnumerationGuard guard = {});

// Whether some triplet with X <= Y reaches the pure-quality optimum value.
bool exists_perfect_quality_maximal_triplet(const ProblemInstance& inst,
                                            EnumerationGuard guard = {});

// All pure-quality optima (exact in scaled weights) with full mask.
std::vector<Matching> pure_quality_optima(const ProblemInstance& inst,
                                          EnumerationGuard guard = {});

}  // namespace revassign

#endif  // REVASSIGN_ORACLE_H_
