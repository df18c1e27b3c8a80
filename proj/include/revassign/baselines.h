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

#ifndef REVASSIGN_BASELINES_H_
#define REVASSIGN_BASELINES_H_

#include <optional>

#include "revassign/bmatching.h"
#include "revassign/instance.h"

namespace revassign {

// Mixing weight t in [0, 1] for the single-level baseline.
class TunedConfig {
 public:
  explicit TunedConfig(double t);
  double t() const { return t_; }

 private:
  double t_;
};

// Pure-quality matching: maximize <W_E, X> under the degree bounds.
std::optional<Matching> solve_pure_quality(
    const ProblemInstance& inst, std::int64_t cost_scale = kDefaultCostScale);

// Maximize <(1 - t) W_E - t W_R, X>. W_E and W_R are combined unnormalized.
std::optional<Matching> solve_t_tuned(
    const ProblemInstance& inst, TunedConfig cfg,
    std::int64_t cost_scale = kDefaultCostScale);

RealMatrix t_tuned_weights(const ProblemInstance& inst, TunedConfig cfg);

}  // namespace revassign

#endif  // REVASSIGN_BASELINES_H_
