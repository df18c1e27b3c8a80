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

#ifndef REVASSIGN_LOWER_LEVEL_H_
#define REVASSIGN_LOWER_LEVEL_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "revassign/matrix.h"

namespace revassign {

// Thrown when a reviewer is proposed fewer papers than it must bid for.
class ProposalTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One reviewer's bid: the papers it agrees to review.
struct BidColumn {
  std::vector<std::size_t> selected;  // ascending paper indices
  double effort_total = 0.0;
};

// The reviewer's effort-minimizing bid: the `capacity` proposed papers with
// the smallest effort, lower index first on ties. Sorting is exact here; the
// integer and relaxed bidding problems share the optimal value.
BidColumn bid_reviewer(std::span<const std::uint8_t> proposal_col,
                       std::span<const double> effort_col, int capacity);

// Column-wise bids for a whole proposal. Minimizing each column minimizes
// the total effort <W_R, Y>.
Matching bid_all(const Matching& proposal, const RealMatrix& effort,
                 std::span<const int> capacity);

}  // namespace revassign

#endif  // REVASSIGN_LOWER_LEVEL_H_
