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

// Randomized property checks backed by the brute-force oracle.

#ifndef REVASSIGN_VERIFY_H_
#define REVASSIGN_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "revassign/instance.h"

namespace revassign {

struct RandomInstanceSpec {
  std::size_t min_papers = 1, max_papers = 5;
  std::size_t min_reviewers = 1, max_reviewers = 3;
  int max_min_reviews = 1;   // l_i drawn from [0, this]
  int max_max_reviews = 2;   // u_i drawn from [l_i, this]
  bool equal_bounds = false; // force l_i = u_i
  int max_capacity = 2;      // U_j drawn from [1, this]
  int max_freedom = 0;       // phi_j drawn from [0, this], U_j + phi_j <= n
  int decimals = 3;          // weights are multiples of 10^-decimals
  bool integer_weights = false;  // W_E in {0..9}
  bool distinct_weights = false; // no repeated value within a column
};

// Random instance with W_E in [0, 1] and W_R in (0, 1] (rounded to the
// requested number of decimals). Always satisfies validate_instance.
ProblemInstance random_instance(std::mt19937_64& rng,
                                const RandomInstanceSpec& spec);

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::string detail;  // first failure, or a summary
  bool passed() const { return cases > 0 && failures == 0; }
};

// solve_bmatching equals exhaustive enumeration on scaled integer values.
CheckResult check_solver_oracle(std::size_t cases, std::uint64_t seed);

// phi = 0: heuristic quality equals pure-quality optimum and AC = 1.
CheckResult check_zero_freedom(std::size_t cases, std::uint64_t seed);

enum class QualityBoundScope {
  kTightBounds,   // quality bound only on instances with l = u
  kAllInstances,  // quality bound on every instance
};

// Heuristic bp_objective <= brute-force BP optimum on every instance; when
// AC = 1 the heuristic quality is <= the optimum's quality, checked within
// `scope`. Half of the instances have l = u. Weights are tie-free.
CheckResult check_bp_bound(std::size_t cases, std::uint64_t seed,
                           QualityBoundScope scope);

// Instances with max phi + 2 max U <= n and a feasible pure-quality
// problem admit a feasible triplet.
CheckResult check_capacity_feasibility(std::size_t cases, std::uint64_t seed);

// Instances passing theorem4_check never make heuristic_solve infeasible.
CheckResult check_topk_feasibility(std::size_t cases, std::uint64_t seed);

// sum of the a smallest sorted weights <= sum w_i x_i for fractional x.
CheckResult check_fractional_dominance(std::size_t samples, std::uint64_t seed);

// bid_reviewer total equals the minimum over all subsets (n <= 10).
CheckResult check_bid_enumeration(std::size_t cases, std::uint64_t seed);

// The three-paper two-reviewer pathological instance and its repair.
CheckResult check_pathological_instance();

// F_1 = <W, X> bitwise on dyadic weights.
CheckResult check_f1_identity(std::size_t cases, std::uint64_t seed);

// Two-row example over the partition {R1, R2}, {R3}.
CheckResult check_two_row_penalties();

// lambda = 0.9 / Delta C keeps every penalized maximizer quality-optimal,
// for F_2, entropy and diversity, on integer weights.
CheckResult check_small_lambda(std::size_t cases, std::uint64_t seed);

// Every check above, in declaration order, with the tight quality scope.
std::vector<CheckResult> run_all_checks(std::size_t cases, std::uint64_t seed);

}  // namespace revassign

#endif  // REVASSIGN_VERIFY_H_
