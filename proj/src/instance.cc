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

#include "revassign/instance.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "revassign/ranking.h"

namespace revassign {
namespace {

std::string paper_id(std::size_t i) { return "p" + std::to_string(i + 1); }
std::string reviewer_id(std::size_t j) { return "r" + std::to_string(j + 1); }

int max_of(const std::vector<int>& v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

}  // namespace

std::vector<Violation> validate_instance(const ProblemInstance& inst) {
  std::vector<Violation> out;
  auto add = [&out](std::string code, std::string message) {
    out.push_back({std::move(code), std::move(message)});
  };

  const auto n = inst.n;
  const auto m = inst.m;
  if (inst.min_reviews.size() != n) {
    add("shape", "l has " + std::to_string(inst.min_reviews.size()) +
                     " entries, expected n=" + std::to_string(n));
  }
  if (inst.max_reviews.size() != n) {
    add("shape", "u has " + std::to_string(inst.max_reviews.size()) +
                     " entries, expected n=" + std::to_string(n));
  }
  if (inst.capacity.size() != m) {
    add("shape", "U has " + std::to_string(inst.capacity.size()) +
                     " entries, expected m=" + std::to_string(m));
  }
  if (inst.freedom.size() != m) {
    add("shape", "phi has " + std::to_string(inst.freedom.size()) +
                     " entries, expected m=" + std::to_string(m));
  }
  if (!inst.quality.same_shape(n, m)) {
    add("shape", "W_E is " + std::to_string(inst.quality.rows()) + "x" +
                     std::to_string(inst.quality.cols()) + ", expected " +
                     std::to_string(n) + "x" + std::to_string(m));
  }
  if (!inst.effort.same_shape(n, m)) {
    add("shape", "W_R is " + std::to_string(inst.effort.rows()) + "x" +
                     std::to_string(inst.effort.cols()) + ", expected " +
                     std::to_string(n) + "x" + std::to_string(m));
  }
  if (!out.empty()) return out;

  for (std::size_t i = 0; i < n; ++i) {
    const int l = inst.min_reviews[i];
    const int u = inst.max_reviews[i];
    if (l < 0) add("negative_min", "l_" + std::to_string(i + 1) + " < 0");
    if (l > u) {
      add("min_exceeds_max", "l_" + std::to_string(i + 1) + " > u_" +
                                 std::to_string(i + 1) + " (" +
                                 std::to_string(l) + " > " +
                                 std::to_string(u) + ")");
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    const int cap = inst.capacity[j];
    const int phi = inst.freedom[j];
    const auto id = std::to_string(j + 1);
    if (cap <= 0) add("nonpositive_capacity", "U_" + id + " <= 0");
    if (phi < 0) add("negative_freedom", "phi_" + id + " < 0");
    if (static_cast<long long>(cap) + phi > static_cast<long long>(n)) {
      add("freedom_exceeds_papers",
          "U_" + id + "+phi_" + id + " > n (" + std::to_string(cap + phi) +
              " > " + std::to_string(n) + ")");
    }
  }
  const long long total_min =
      std::accumulate(inst.min_reviews.begin(), inst.min_reviews.end(), 0LL);
  const long long total_cap =
      std::accumulate(inst.capacity.begin(), inst.capacity.end(), 0LL);
  if (total_min > total_cap) {
    add("demand_exceeds_capacity", "sum l = " + std::to_string(total_min) +
                                       " > sum U = " +
                                       std::to_string(total_cap));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double q = inst.quality(i, j);
      const double e = inst.effort(i, j);
      if (!std::isfinite(q) || q < 0.0) {
        add("quality_negative", "W_E(" + paper_id(i) + "," + reviewer_id(j) +
                                    ") is negative or not finite");
      }
      if (!std::isfinite(e) || e <= 0.0) {
        add("effort_nonpositive", "W_R(" + paper_id(i) + "," +
                                      reviewer_id(j) +
                                      ") is not strictly positive");
      }
    }
  }
  return out;
}

bool theorem3_check(const ProblemInstance& inst) {
  return static_cast<long long>(max_of(inst.freedom)) +
             2LL * max_of(inst.capacity) <=
         static_cast<long long>(inst.n);
}

bool theorem4_check(const ProblemInstance& inst) {
  const auto n = inst.n;
  const auto m = inst.m;
  const auto k = static_cast<std::size_t>(
      std::max(0, max_of(inst.freedom) + max_of(inst.capacity)));
  const long long total_min =
      std::accumulate(inst.min_reviews.begin(), inst.min_reviews.end(), 0LL);

  // picked(i, j): paper i could be proposed to or bid on by reviewer j.
  Matrix<std::uint8_t> picked(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto quality_col = inst.quality.column(j);
    const auto effort_col = inst.effort.column(j);
    for (auto i : top_k_largest(quality_col, k)) picked(i, j) = 1;
    for (auto i : top_k_smallest(effort_col, k)) picked(i, j) = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    long long free_reviewers = 0;
    for (std::size_t j = 0; j < m; ++j) free_reviewers += picked(i, j) ? 0 : 1;
    if (free_reviewers < total_min) return false;
  }
  return true;
}

}  // namespace revassign
