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

#include "revassign/metrics.h"

#include <algorithm>
#include <limits>
#include <string>

namespace revassign {
namespace {

std::vector<double> reviewer_efforts(const Matching& x,
                                     const RealMatrix& effort) {
  if (!x.same_shape(effort)) {
    throw std::invalid_argument("matching and effort matrix shapes differ");
  }
  std::vector<double> rho(x.cols(), 0.0);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (x(i, j)) rho[j] += effort(i, j);
    }
  }
  return rho;
}

struct EffortStats {
  std::size_t n_active = 0;
  double total = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};

EffortStats effort_stats(std::span<const double> rho) {
  EffortStats s;
  for (double r : rho) {
    if (r > 0.0) {
      ++s.n_active;
      s.total += r;
    }
  }
  if (s.n_active == 0) return s;
  s.mean = s.total / static_cast<double>(s.n_active);
  double sq = 0.0;
  for (double r : rho) {
    if (r > 0.0) sq += (r - s.mean) * (r - s.mean);
  }
  s.variance = sq / static_cast<double>(s.n_active);
  return s;
}

}  // namespace

MetricsReport compute_report(const Matching& x, const ProblemInstance& inst) {
  MetricsReport report;
  report.quality = inner(inst.quality, x);
  report.efforts = reviewer_efforts(x, inst.effort);
  const auto stats = effort_stats(report.efforts);
  report.n_active = stats.n_active;
  report.total_effort = stats.total;
  report.avg_effort = stats.mean;
  report.variance = stats.variance;
  report.degenerate = stats.n_active == 0;
  return report;
}

double average_effort(const Matching& x, const RealMatrix& effort) {
  return effort_stats(reviewer_efforts(x, effort)).mean;
}

double effort_variance(const Matching& x, const RealMatrix& effort) {
  return effort_stats(reviewer_efforts(x, effort)).variance;
}

double qp(const Matching& x, const Matching& x_ilp, const RealMatrix& quality) {
  const double base = inner(quality, x_ilp);
  const double value = inner(quality, x);
  if (base == 0.0) {
    if (value == 0.0) return 1.0;
    throw DegenerateMetric("QP baseline has zero quality");
  }
  return value / base;
}

double raer(const Matching& x, const Matching& x_prime,
            const RealMatrix& effort) {
  const double base = average_effort(x_prime, effort);
  if (base <= 0.0) throw DegenerateMetric("RAER baseline has no active reviewer");
  return average_effort(x, effort) / base;
}

double fr(const Matching& x, const Matching& x_prime, const RealMatrix& effort) {
  const double base = effort_variance(x_prime, effort);
  const double value = effort_variance(x, effort);
  if (base <= 0.0) {
    if (value <= 0.0) return 1.0;
    throw DegenerateMetric("FR baseline has zero effort variance");
  }
  return value / base;
}

bool is_phi_weakly_fair(const Matching& x, const RealMatrix& effort,
                        std::span<const int> freedom,
                        FairnessReading reading) {
  if (!x.same_shape(effort) || freedom.size() != x.cols()) {
    throw std::invalid_argument("is_phi_weakly_fair: shape mismatch");
  }
  const auto n = x.rows();
  for (std::size_t j = 0; j < x.cols(); ++j) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!x(i, j)) continue;
      any = true;
      lo = std::min(lo, effort(i, j));
      hi = std::max(hi, effort(i, j));
    }
    long long better_off = 0;
    if (!any) {
      better_off = static_cast<long long>(n);
    } else {
      const double threshold =
          reading == FairnessReading::kAtLeastMinAssigned ? lo : hi;
      for (std::size_t i = 0; i < n; ++i) {
        if (!x(i, j) && effort(i, j) >= threshold) ++better_off;
      }
    }
    if (better_off < freedom[j]) return false;
  }
  return true;
}

}  // namespace revassign
