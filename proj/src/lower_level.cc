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

#include "revassign/lower_level.h"

#include <algorithm>
#include <string>

#include "revassign/ranking.h"

namespace revassign {

BidColumn bid_reviewer(std::span<const std::uint8_t> proposal_col,
                       std::span<const double> effort_col, int capacity) {
  if (proposal_col.size() != effort_col.size()) {
    throw std::invalid_argument("proposal and effort columns differ in length");
  }
  if (capacity < 0) throw std::invalid_argument("negative capacity");

  std::vector<std::size_t> proposed;
  for (std::size_t i = 0; i < proposal_col.size(); ++i) {
    if (proposal_col[i]) proposed.push_back(i);
  }
  const auto need = static_cast<std::size_t>(capacity);
  if (proposed.size() < need) {
    throw ProposalTooSmall("proposal too small: " +
                           std::to_string(proposed.size()) +
                           " papers proposed, " + std::to_string(need) +
                           " required");
  }

  auto order = rank_ascending(effort_col, std::move(proposed));
  order.resize(need);
  std::sort(order.begin(), order.end());

  BidColumn bid;
  for (auto i : order) bid.effort_total += effort_col[i];
  bid.selected = std::move(order);
  return bid;
}

Matching bid_all(const Matching& proposal, const RealMatrix& effort,
                 std::span<const int> capacity) {
  if (!proposal.same_shape(effort) || capacity.size() != proposal.cols()) {
    throw std::invalid_argument("bid_all: shape mismatch");
  }
  Matching bids(proposal.rows(), proposal.cols());
  for (std::size_t j = 0; j < proposal.cols(); ++j) {
    const auto z = proposal.column(j);
    const auto w = effort.column(j);
    try {
      for (auto i : bid_reviewer(z, w, capacity[j]).selected) bids(i, j) = 1;
    } catch (const ProposalTooSmall& e) {
      throw ProposalTooSmall("reviewer " + std::to_string(j + 1) + ": " +
                             e.what());
    }
  }
  return bids;
}

}  // namespace revassign
