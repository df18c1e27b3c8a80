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

#include "revassign/min_cost_flow.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

namespace revassign {
namespace {

constexpr MinCostFlow::Cost kUnreached = std::numeric_limits<std::int64_t>::max();

}  // namespace

MinCostFlow::MinCostFlow(std::size_t num_nodes) : adjacency_(num_nodes) {}

std::size_t MinCostFlow::add_arc(std::size_t tail, std::size_t head,
                                 Flow capacity, Cost cost) {
  if (tail >= head || head >= adjacency_.size()) {
    throw std::invalid_argument("arcs must go forward in topological order");
  }
  if (capacity < 0) throw std::invalid_argument("negative arc capacity");
  const std::size_t slot = adjacency_[tail].size();
  const std::size_t back = adjacency_[head].size();
  adjacency_[tail].push_back({head, back, capacity, cost});
  adjacency_[head].push_back({tail, slot, 0, -cost});
  arcs_.push_back({tail, slot, capacity});
  return arcs_.size() - 1;
}

MinCostFlow::Flow MinCostFlow::flow_on(std::size_t arc) const {
  const auto& ref = arcs_.at(arc);
  return ref.capacity - adjacency_[ref.node][ref.slot].residual;
}

MinCostFlow::Result MinCostFlow::solve(std::size_t source, std::size_t sink) {
  const std::size_t num_nodes = adjacency_.size();
  Result result;

  // Shortest distances on the original DAG give valid potentials.
  std::vector<Cost> potential(num_nodes, kUnreached);
  potential[source] = 0;
  for (std::size_t v = source; v < num_nodes; ++v) {
    if (potential[v] == kUnreached) continue;
    for (const auto& arc : adjacency_[v]) {
      if (arc.residual > 0 && arc.head > v &&
          potential[v] + arc.cost < potential[arc.head]) {
        potential[arc.head] = potential[v] + arc.cost;
      }
    }
  }
  // Nodes never reached keep potential 0; no augmenting path touches them.
  for (auto& p : potential) {
    if (p == kUnreached) p = 0;
  }

  std::vector<Cost> dist(num_nodes);
  std::vector<std::size_t> prev_node(num_nodes);
  std::vector<std::size_t> prev_slot(num_nodes);
  using Entry = std::pair<Cost, std::size_t>;

  while (true) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[source] = 0;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.emplace(0, source);
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d != dist[v]) continue;
      for (std::size_t s = 0; s < adjacency_[v].size(); ++s) {
        const auto& arc = adjacency_[v][s];
        if (arc.residual <= 0) continue;
        const Cost reduced = arc.cost + potential[v] - potential[arc.head];
        const Cost candidate = d + reduced;
        if (candidate < dist[arc.head]) {
          dist[arc.head] = candidate;
          prev_node[arc.head] = v;
          prev_slot[arc.head] = s;
          heap.emplace(candidate, arc.head);
        }
      }
    }
    if (dist[sink] == kUnreached) break;

    const Cost path_cost = dist[sink] + potential[sink] - potential[source];
    if (path_cost >= 0) break;

    for (std::size_t v = 0; v < num_nodes; ++v) {
      if (dist[v] != kUnreached) potential[v] += dist[v];
    }

    Flow bottleneck = std::numeric_limits<Flow>::max();
    for (std::size_t v = sink; v != source; v = prev_node[v]) {
      bottleneck = std::min(bottleneck,
                            adjacency_[prev_node[v]][prev_slot[v]].residual);
    }
    for (std::size_t v = sink; v != source; v = prev_node[v]) {
      auto& arc = adjacency_[prev_node[v]][prev_slot[v]];
      arc.residual -= bottleneck;
      adjacency_[v][arc.reverse].residual += bottleneck;
    }
    result.flow += bottleneck;
    result.cost += bottleneck * path_cost;
  }
  return result;
}

}  // namespace revassign
