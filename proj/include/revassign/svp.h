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

// Penalty functionals over a partition of the reviewers, and the secondary
// variational problem max <W, X> - lambda * C(X) solved by enumeration.

#ifndef REVASSIGN_SVP_H_
#define REVASSIGN_SVP_H_

#include <cstddef>
#include <vector>

#include "revassign/bmatching.h"
#include "revassign/matrix.h"
#include "revassign/oracle.h"

namespace revassign {

// Disjoint nonempty reviewer blocks covering [0, m).
class ReviewerPartition {
 public:
  ReviewerPartition(std::vector<std::vector<std::size_t>> blocks,
                    std::size_t m);

  const std::vector<std::vector<std::size_t>>& blocks() const {
    return blocks_;
  }
  std::size_t size() const { return blocks_.size(); }
  std::size_t reviewers() const { return m_; }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::size_t m_;
};

// s_ik = sum_{j in B_k} w_ij X_ij.
Matrix<double> block_sums(const Matching& x, const RealMatrix& weights,
                          const ReviewerPartition& part);

// F_p(X) = sum_i sum_k s_ik^p with 0^p = 0. F_2 is the weighted diversity.
double weighted_p_diversity(const Matching& x, const RealMatrix& weights,
                            const ReviewerPartition& part, double p);

// C(X) = -sum_i sum_k s_ik ln s_ik with 0 ln 0 = 0.
double entropy_penalty(const Matching& x, const RealMatrix& weights,
                       const ReviewerPartition& part);

// D(X) = sum_i sum_k (sum_{j in B_k} X_ij)^2.
double diversity(const Matching& x, const ReviewerPartition& part);

enum class PenaltyKind { kWeightedDiversity, kEntropy, kDiversity, kPDiversity };

struct SvpConfig {
  double lambda = 0.0;
  PenaltyKind penalty = PenaltyKind::kWeightedDiversity;
  double p = 2.0;  // only for kPDiversity; must be >= 1
};

double evaluate_penalty(const Matching& x, const RealMatrix& weights,
                        const ReviewerPartition& part, const SvpConfig& cfg);

struct SvpResult {
  std::vector<Matching> maximizers;  // of <W, X> - lambda * C(X)
  double delta_penalty = 0.0;        // max C - min C over feasible X
  double epsilon_bound = 0.0;        // 1 / delta_penalty (inf when 0)
  std::size_t feasible_count = 0;
};

// Exhaustive search; throws GuardError ("instance too large for
// enumeration") when the guard trips. Ties in the penalized objective are
// resolved with a relative tolerance of 1e-9.
SvpResult svp_enumerate(const RealMatrix& weights, const EdgeMask& mask,
                        const DegreeBounds& bounds,
                        const ReviewerPartition& part, const SvpConfig& cfg,
                        EnumerationGuard guard = {});

}  // namespace revassign

#endif  // REVASSIGN_SVP_H_
