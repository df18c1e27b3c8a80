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

#ifndef REVASSIGN_MIN_COST_FLOW_H_
#define REVASSIGN_MIN_COST_FLOW_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace revassign {

// Successive shortest paths on an acyclic network with integer costs.
//
// Arcs may carry negative costs as long as the input network (without
// residual arcs) is a DAG whose nodes are numbered in topological order;
// initial potentials come from one DAG relaxation pass, after which every
// augmentation uses Dijkstra on reduced costs.
//
// Augmentation stops when the sink is unreachable or when the cheapest
// augmenting path has nonnegative cost, so the result is a minimum-cost flow
// over all flow values (the "free amount" formulation).
class MinCostFlow {
 public:
  using Cost = std::int64_t;
  using Flow = std::int64_t;

  explicit MinCostFlow(std::size_t num_nodes);

  // Returns the arc index. Requires tail < head (topological numbering).
  std::size_t add_arc(std::size_t tail, std::size_t head, Flow capacity,
                      Cost cost);

  struct Result {
    Flow flow = 0;
    Cost cost = 0;
  };
  Result solve(std::size_t source, std::size_t sink);

  Flow flow_on(std::size_t arc) const;

 private:
  struct Arc {
    std::size_t head;
    std::size_t reverse;  // index into adjacency_[head]
    Flow residual;
    Cost cost;
  };
  struct ArcRef {
    std::size_t node;
    std::size_t slot;
    Flow capacity;
  };

  std::vector<std::vector<Arc>> adjacency_;
  std::vector<ArcRef> arcs_;
};

}  // namespace revassign

#endif  // REVASSIGN_MIN_COST_FLOW_H_
