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

#ifndef REVASSIGN_RANKING_H_
#define REVASSIGN_RANKING_H_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace revassign {

// Every "top k by weight" selection in the library goes through these two
// helpers. Ties are broken by the lower index.

// Indices from `candidates` ordered by decreasing value.
inline std::vector<std::size_t> rank_descending(
    std::span<const double> values, std::vector<std::size_t> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] > values[b];
                   });
  return candidates;
}

// Indices from `candidates` ordered by increasing value.
inline std::vector<std::size_t> rank_ascending(
    std::span<const double> values, std::vector<std::size_t> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] < values[b];
                   });
  return candidates;
}

inline std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

// Indices of the k largest values.
inline std::vector<std::size_t> top_k_largest(std::span<const double> values,
                                              std::size_t k) {
  auto order = rank_descending(values, all_indices(values.size()));
  order.resize(std::min(k, order.size()));
  return order;
}

inline std::vector<std::size_t> top_k_smallest(std::span<const double> values,
                                               std::size_t k) {
  auto order = rank_ascending(values, all_indices(values.size()));
  order.resize(std::min(k, order.size()));
  return order;
}

}  // namespace revassign

#endif  // REVASSIGN_RANKING_H_
