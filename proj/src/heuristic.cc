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

#include <stdexcept>

#include "revassign/lower_level.h"
#include "revassign/ranking.h"

namespace revassign {

std::vector<std::string> check_triplet(const ProblemInstance& inst,
                                       const BpTriplet& t) {
  std::vector<std::string> out;
  const auto n = inst.n;
  const auto m = inst.m;
  const auto& x = t.assignment;
  const auto& y = t.bidding;
  const auto& z = t.proposal;
  if (!x.same_shape(n, m) || !y.same_shape(n, m) || !z.same_shape(n, m)) {
    out.push_back("shape mismatch");
    return out;
  }
  if (!x.is_binary() || !y.is_binary() || !z.is_binary()) {
    out.push_back("non-binary entries");
  }
  if (!y.dominated_by(z)) out.push_back("Y not <= Z");
  for (std::size_t j = 0; j < m; ++j) {
    const auto id = std::to_string(j + 1);
    const auto want_z =
        static_cast<std::size_t>(inst.capacity[j] + inst.freedom[j]);
    if (z.col_sum(j) != want_z) out.push_back("sum Z_r" + id + " != U+phi");
    if (y.col_sum(j) != static_cast<std::size_t>(inst.capacity[j])) {
      out.push_back("sum Y_r" + id + " != U");
    }
    if (x.col_sum(j) > static_cast<std::size_t>(inst.capacity[j])) {
      out.push_back("sum X_r" + id + " > U");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto deg = x.row_sum(i);
    if (deg < static_cast<std::size_t>(inst.min_reviews[i]) ||
        deg > static_cast<std::size_t>(inst.max_reviews[i])) {
      out.push_back("paper p" + std::to_string(i + 1) + " degree out of [l,u]");
    }
  }
  if (!x.dominated_by(EdgeMask::consistency(z, y))) {
    out.push_back("X not <= E - Z + Y");
  }
  return out;
}

Matching greedy_proposal(const RealMatrix& quality,
                         std::span<const int> capacity,
                         std::span<const int> freedom) {
  const auto n = quality.rows();
  const auto m = quality.cols();
  if (capacity.size() != m || freedom.size() != m) {
    throw std::invalid_argument("greedy_proposal: shape mismatch");
  }
  Matching proposal(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    const long long size = static_cast<long long>(capacity[j]) + freedom[j];
    if (size < 0 || size > static_cast<long long>(n)) {
      throw std::invalid_argument(
          "reviewer " + std::to_string(j + 1) + ": U+phi = " +
          std::to_string(size) + " outside [0, n=" + std::to_string(n) + "]");
    }
    const auto col = quality.column(j);
    for (auto i : top_k_largest(col, static_cast<std::size_t>(size))) {
      proposal(i, j) = 1;
    }
  }
  return proposal;
}

std::optional<BpTriplet> heuristic_solve(const ProblemInstance& inst,
                                         std::int64_t cost_scale) {
  Matching proposal = greedy_proposal(inst.quality, inst.capacity, inst.freedom);
  Matching bidding = bid_all(proposal, inst.effort, inst.capacity);

  // Upper level: W_E + Y, each bid edge earns +1.
  RealMatrix weights = inst.quality;
  for (std::size_t i = 0; i < inst.n; ++i) {
    for (std::size_t j = 0; j < inst.m; ++j) {
      weights(i, j) += bidding(i, j);
    }
  }
  auto assignment =
      solve_bmatching({std::move(weights), cost_scale},
                      EdgeMask::consistency(proposal, bidding),
                      DegreeBounds::of(inst));
  if (!assignment) return std::nullopt;

  BpTriplet out;
  out.bp_objective = inner(inst.quality, *assignment) +
                     static_cast<double>(overlap(bidding, *assignment));
  out.accordance = accordance(*assignment, bidding);
  out.assignment = std::move(*assignment);
  out.bidding = std::move(bidding);
  out.proposal = std::move(proposal);
  return out;
}

double accordance(const Matching& assignment, const Matching& bidding) {
  const auto total = assignment.count();
  if (total == 0) return 1.0;
  return static_cast<double>(overlap(assignment, bidding)) /
         static_cast<double>(total);
}

}  // namespace revassign
