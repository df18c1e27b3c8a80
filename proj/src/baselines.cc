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

#include "revassign/baselines.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace revassign {

TunedConfig::TunedConfig(double t) : t_(t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("t must lie in [0, 1], got " +
                                std::to_string(t));
  }
}

std::optional<Matching> solve_pure_quality(const ProblemInstance& inst,
                                           std::int64_t cost_scale) {
  return solve_bmatching({inst.quality, cost_scale},
                         EdgeMask::full(inst.n, inst.m),
                         DegreeBounds::of(inst));
}

RealMatrix t_tuned_weights(const ProblemInstance& inst, TunedConfig cfg) {
  if (!inst.quality.same_shape(inst.effort)) {
    throw std::invalid_argument("W_E and W_R shapes differ");
  }
  const double t = cfg.t();
  RealMatrix w(inst.n, inst.m);
  for (std::size_t i = 0; i < inst.n; ++i) {
    for (std::size_t j = 0; j < inst.m; ++j) {
      w(i, j) = (1.0 - t) * inst.quality(i, j) - t * inst.effort(i, j);
    }
  }
  return w;
}

std::optional<Matching> solve_t_tuned(const ProblemInstance& inst,
                                      TunedConfig cfg,
                                      std::int64_t cost_scale) {
  return solve_bmatching({t_tuned_weights(inst, cfg), cost_scale},
                         EdgeMask::full(inst.n, inst.m),
                         DegreeBounds::of(inst));
}

}  // namespace revassign
