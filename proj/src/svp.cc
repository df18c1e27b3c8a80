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

#include "revassign/svp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace revassign {

ReviewerPartition::ReviewerPartition(
    std::vector<std::vector<std::size_t>> blocks, std::size_t m)
    : blocks_(std::move(blocks)), m_(m) {
  std::vector<int> seen(m, 0);
  for (const auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("empty partition block");
    for (auto j : block) {
      if (j >= m) {
        throw std::invalid_argument("reviewer " + std::to_string(j + 1) +
                                    " outside [1, m]");
      }
      if (seen[j]++) {
        throw std::invalid_argument("reviewer " + std::to_string(j + 1) +
                                    " appears in two blocks");
      }
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!seen[j]) {
      throw std::invalid_argument("reviewer " + std::to_string(j + 1) +
                                  " is not covered by the partition");
    }
  }
}

Matrix<double> block_sums(const Matching& x, const RealMatrix& weights,
                          const ReviewerPartition& part) {
  if (!x.same_shape(weights) || x.cols() != part.reviewers()) {
    throw std::invalid_argument("block_sums: shape mismatch");
  }
  Matrix<double> s(x.rows(), part.size());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < part.size(); ++k) {
      double total = 0.0;
      for (auto j : part.blocks()[k]) {
        if (x(i, j)) total += weights(i, j);
      }
      s(i, k) = total;
    }
  }
  return s;
}

double weighted_p_diversity(const Matching& x, const RealMatrix& weights,
                            const ReviewerPartition& part, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p-diversity requires p >= 1");
  const auto s = block_sums(x, weights, part);
  double total = 0.0;
  for (double v : s.data()) {
    if (v == 0.0) continue;
    total += p == 1.0 ? v : (p == 2.0 ? v * v : std::pow(v, p));
  }
  return total;
}

double entropy_penalty(const Matching& x, const RealMatrix& weights,
                       const ReviewerPartition& part) {
  const auto s = block_sums(x, weights, part);
  double total = 0.0;
  for (double v : s.data()) {
    if (v > 0.0) total -= v * std::log(v);
  }
  return total;
}

double diversity(const Matching& x, const ReviewerPartition& part) {
  if (x.cols() != part.reviewers()) {
    throw std::invalid_argument("diversity: shape mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (const auto& block : part.blocks()) {
      double count = 0.0;
      for (auto j : block) count += x(i, j);
      total += count * count;
    }
  }
  return total;
}

double evaluate_penalty(const Matching& x, const RealMatrix& weights,
                        const ReviewerPartition& part, const SvpConfig& cfg) {
  switch (cfg.penalty) {
    case PenaltyKind::kWeightedDiversity:
      return weighted_p_diversity(x, weights, part, 2.0);
    case PenaltyKind::kEntropy:
      return entropy_penalty(x, weights, part);
    case PenaltyKind::kDiversity:
      return diversity(x, part);
    case PenaltyKind::kPDiversity:
      return weighted_p_diversity(x, weights, part, cfg.p);
  }
  throw std::invalid_argument("unknown penalty");
}

SvpResult svp_enumerate(const RealMatrix& weights, const EdgeMask& mask,
                        const DegreeBounds& bounds,
                        const ReviewerPartition& part, const SvpConfig& cfg,
                        EnumerationGuard guard) {
  if (cfg.penalty == PenaltyKind::kPDiversity && !(cfg.p >= 1.0)) {
    throw std::invalid_argument("p-diversity requires p >= 1");
  }
  struct Scored {
    Matching x;
    double objective;
  };
  std::vector<Scored> all;
  double c_min = std::numeric_limits<double>::infinity();
  double c_max = -std::numeric_limits<double>::infinity();
  double best = -std::numeric_limits<double>::infinity();
  for_each_feasible_matching(
      bounds, mask,
      [&](const Matching& x) {
        const double c = evaluate_penalty(x, weights, part, cfg);
        c_min = std::min(c_min, c);
        c_max = std::max(c_max, c);
        const double value = inner(weights, x) - cfg.lambda * c;
        best = std::max(best, value);
        all.push_back({x, value});
      },
      guard);

  SvpResult result;
  result.feasible_count = all.size();
  if (all.empty()) {
    result.epsilon_bound = std::numeric_limits<double>::infinity();
    return result;
  }
  result.delta_penalty = c_max - c_min;
  result.epsilon_bound = result.delta_penalty > 0.0
                             ? 1.0 / result.delta_penalty
                             : std::numeric_limits<double>::infinity();
  const double tol = 1e-9 * std::max(1.0, std::fabs(best));
  for (auto& s : all) {
    if (s.objective >= best - tol) result.maximizers.push_back(std::move(s.x));
  }
  return result;
}

}  // namespace revassign
