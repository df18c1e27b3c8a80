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

#include "revassign/bmatching.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "revassign/min_cost_flow.h"

namespace revassign {
namespace {

// Per-edge scaled weights stay below 2^52 so that the priority cost below
// (a multiple of the total) cannot overflow for any realistic instance.
constexpr double kMaxScaledWeight = 4503599627370496.0;  // 2^52

void check_bounds(const EdgeMask& mask, const DegreeBounds& bounds,
                  const RealMatrix& weights) {
  const auto n = mask.rows();
  const auto m = mask.cols();
  if (!weights.same_shape(n, m)) {
    throw std::invalid_argument("weights are " +
                                std::to_string(weights.rows()) + "x" +
                                std::to_string(weights.cols()) +
                                ", mask is " + std::to_string(n) + "x" +
                                std::to_string(m));
  }
  if (bounds.min_reviews.size() != n || bounds.max_reviews.size() != n ||
      bounds.capacity.size() != m) {
    throw std::invalid_argument("degree bounds do not match matrix shape");
  }
  if (!mask.is_binary()) throw std::invalid_argument("mask is not binary");
  for (std::size_t i = 0; i < n; ++i) {
    if (bounds.min_reviews[i] < 0 ||
        bounds.min_reviews[i] > bounds.max_reviews[i]) {
      throw std::invalid_argument("invalid bounds for paper " +
                                  std::to_string(i + 1) + ": l > u or l < 0");
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (bounds.capacity[j] < 0) {
      throw std::invalid_argument("negative capacity for reviewer " +
                                  std::to_string(j + 1));
    }
  }
}

}  // namespace

std::int64_t scaled_weight(double w, std::int64_t cost_scale) {
  if (cost_scale < 1) throw std::invalid_argument("cost_scale must be >= 1");
  const double scaled = std::nearbyint(w * static_cast<double>(cost_scale));
  if (!std::isfinite(scaled) || std::fabs(scaled) > kMaxScaledWeight) {
    throw std::overflow_error("weight " + std::to_string(w) +
                              " does not fit the fixed-point cost range");
  }
  return static_cast<std::int64_t>(scaled);
}

std::optional<Matching> solve_bmatching(const WeightObjective& objective,
                                        const EdgeMask& mask,
                                        const DegreeBounds& bounds) {
  check_bounds(mask, bounds, objective.weights);
  const auto n = mask.rows();
  const auto m = mask.cols();

  Matrix<std::int64_t> profit(n, m);
  std::int64_t max_abs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!mask(i, j)) continue;
      profit(i, j) = scaled_weight(objective.weights(i, j),
                                   objective.cost_scale);
      max_abs = std::max(max_abs, profit(i, j) < 0 ? -profit(i, j)
                                                   : profit(i, j));
    }
  }

  // Quick necessary checks: each paper needs l_i permitted reviewers.
  for (std::size_t i = 0; i < n; ++i) {
    if (mask.row_sum(i) < static_cast<std::size_t>(bounds.min_reviews[i])) {
      return std::nullopt;
    }
  }

  // Any flow uses at most `edge_budget` paper->reviewer arcs, so objective
  // values of any two flows differ by less than 2 * edge_budget * max_abs.
  __int128 edge_budget = 0;
  for (std::size_t i = 0; i < n; ++i) {
    edge_budget += std::min<std::size_t>(
        static_cast<std::size_t>(bounds.max_reviews[i]), m);
  }
  const __int128 priority128 = 2 * edge_budget * max_abs + 1;
  __int128 total_min = 0;
  for (auto l : bounds.min_reviews) total_min += l;
  if (priority128 * (total_min + 1) + edge_budget * max_abs >
      static_cast<__int128>(std::numeric_limits<std::int64_t>::max() / 4)) {
    throw std::overflow_error("instance too large for 64-bit flow costs");
  }
  const auto priority = static_cast<std::int64_t>(priority128);

  // Nodes: source, papers, reviewers, sink (topological order).
  const std::size_t source = 0;
  const std::size_t sink = n + m + 1;
  MinCostFlow flow(n + m + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const int l = bounds.min_reviews[i];
    const int u = bounds.max_reviews[i];
    if (l > 0) flow.add_arc(source, 1 + i, l, -priority);
    if (u > l) flow.add_arc(source, 1 + i, u - l, 0);
  }
  Matrix<std::size_t> arc_of(n, m, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (mask(i, j)) {
        arc_of(i, j) = flow.add_arc(1 + i, 1 + n + j, 1, -profit(i, j));
      }
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (bounds.capacity[j] > 0) {
      flow.add_arc(1 + n + j, sink, bounds.capacity[j], 0);
    }
  }

  flow.solve(source, sink);

  Matching x(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (mask(i, j) && flow.flow_on(arc_of(i, j)) > 0) x(i, j) = 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (x.row_sum(i) < static_cast<std::size_t>(bounds.min_reviews[i])) {
      return std::nullopt;
    }
  }
  return x;
}

double objective_value(const RealMatrix& weights, const Matching& x) {
  return inner(weights, x);
}

}  // namespace revassign
