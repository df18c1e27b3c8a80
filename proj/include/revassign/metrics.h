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

#ifndef REVASSIGN_METRICS_H_
#define REVASSIGN_METRICS_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "revassign/instance.h"
#include "revassign/matrix.h"

namespace revassign {

// A ratio metric whose baseline is zero.
class DegenerateMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct MetricsReport {
  double quality = 0.0;          // <W_E, X>
  std::vector<double> efforts;   // rho_j = <(W_R)_j, X_j>, one per reviewer
  std::size_t n_active = 0;      // reviewers with rho_j > 0
  double total_effort = 0.0;     // sum_j rho_j
  double avg_effort = 0.0;       // total_effort / n_active
  double variance = 0.0;         // population variance of active rho_j
  bool degenerate = false;       // n_active == 0
};

MetricsReport compute_report(const Matching& x, const ProblemInstance& inst);

// Average effort over active reviewers (0 when nobody is active).
double average_effort(const Matching& x, const RealMatrix& effort);

// Population variance of the active reviewers' efforts.
double effort_variance(const Matching& x, const RealMatrix& effort);

// Q(X) / Q(X_ILP).
double qp(const Matching& x, const Matching& x_ilp, const RealMatrix& quality);

// E_avg(X) / E_avg(X').
double raer(const Matching& x, const Matching& x_prime,
            const RealMatrix& effort);

// theta(X) / theta(X'); 1.0 when both variances vanish.
double fr(const Matching& x, const Matching& x_prime, const RealMatrix& effort);

// How BC_j(X) thresholds effort against reviewer j's assigned papers.
enum class FairnessReading {
  kAtLeastMinAssigned,  // effort >= min over assigned (formula as printed)
  kAtLeastMaxAssigned,  // effort >= max over assigned (proof prose)
};

// |BC_j(X)| >= phi_j for every j, where BC_j(X) holds the unassigned papers
// that are at least as costly for j as its assigned ones. A reviewer with no
// assigned paper has BC_j = all papers.
bool is_phi_weakly_fair(
    const Matching& x, const RealMatrix& effort, std::span<const int> freedom,
    FairnessReading reading = FairnessReading::kAtLeastMinAssigned);

}  // namespace revassign

#endif  // REVASSIGN_METRICS_H_
