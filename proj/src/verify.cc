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

#include "revassign/verify.h"

#include <algorithm>
#include <cmath>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

#include "revassign/baselines.h"
#include "revassign/bmatching.h"
#include "revassign/heuristic.h"
#include "revassign/lower_level.h"
#include "revassign/oracle.h"
#include "revassign/svp.h"

namespace revassign {
namespace {

template <typename T>
T uniform_int(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

double uniform_real(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// `count` values k / scale with k in [lo, hi], optionally pairwise distinct.
std::vector<double> draw_grid(std::mt19937_64& rng, std::size_t count,
                              long lo, long hi, double scale, bool distinct) {
  std::vector<long> ks;
  while (ks.size() < count) {
    const long k = uniform_int<long>(rng, lo, hi);
    if (distinct && std::find(ks.begin(), ks.end(), k) != ks.end()) continue;
    ks.push_back(k);
  }
  std::vector<double> out;
  for (long k : ks) out.push_back(static_cast<double>(k) / scale);
  return out;
}

CheckResult named(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  return r;
}

void note_failure(CheckResult& r, const std::string& what) {
  if (r.failures++ == 0) r.detail = what;
}

std::string describe(const ProblemInstance& inst) {
  std::ostringstream out;
  out << "n=" << inst.n << " m=" << inst.m;
  return out.str();
}

void finish(CheckResult& r) {
  if (r.failures == 0) {
    std::ostringstream out;
    out << r.cases << " cases";
    if (r.skipped) out << ", " << r.skipped << " skipped";
    r.detail = out.str();
  } else {
    std::ostringstream out;
    out << r.failures << "/" << r.cases << " failed; first: " << r.detail;
    r.detail = out.str();
  }
}

}  // namespace

ProblemInstance random_instance(std::mt19937_64& rng,
                                const RandomInstanceSpec& spec) {
  for (;;) {
    ProblemInstance inst;
    inst.n = uniform_int(rng, spec.min_papers, spec.max_papers);
    inst.m = uniform_int(rng, spec.min_reviewers, spec.max_reviewers);
    const int m = static_cast<int>(inst.m);
    const int n = static_cast<int>(inst.n);
    for (std::size_t i = 0; i < inst.n; ++i) {
      int l, u;
      if (spec.equal_bounds) {
        l = u = uniform_int(rng, 1, std::max(1, std::min(spec.max_max_reviews, m)));
      } else {
        l = uniform_int(rng, 0, std::min(spec.max_min_reviews, m));
        u = uniform_int(rng, l, std::max(l, std::min(spec.max_max_reviews, m)));
      }
      inst.min_reviews.push_back(l);
      inst.max_reviews.push_back(u);
    }
    for (std::size_t j = 0; j < inst.m; ++j) {
      const int cap = uniform_int(rng, 1, std::min(spec.max_capacity, n));
      const int phi = uniform_int(rng, 0, std::min(spec.max_freedom, n - cap));
      inst.capacity.push_back(cap);
      inst.freedom.push_back(phi);
    }
    const double scale = std::pow(10.0, spec.decimals);
    const long top = static_cast<long>(scale);
    inst.quality = RealMatrix(inst.n, inst.m);
    inst.effort = RealMatrix(inst.n, inst.m);
    for (std::size_t j = 0; j < inst.m; ++j) {
      const auto q = spec.integer_weights
                         ? draw_grid(rng, inst.n, 0, 9, 1.0, false)
                         : draw_grid(rng, inst.n, 0, top, scale,
                                     spec.distinct_weights);
      const auto e = draw_grid(rng, inst.n, 1, top, scale, spec.distinct_weights);
      for (std::size_t i = 0; i < inst.n; ++i) {
        inst.quality(i, j) = q[i];
        inst.effort(i, j) = e[i];
      }
    }
    if (validate_instance(inst).empty()) return inst;
  }
}

CheckResult check_solver_oracle(std::size_t cases, std::uint64_t seed) {
  CheckResult r = named("solver equals brute-force enumeration");
  std::mt19937_64 rng(seed);
  RandomInstanceSpec spec;
  spec.max_papers = 5;
  spec.max_reviewers = 3;
  spec.max_max_reviews = 2;
  spec.max_capacity = 2;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto inst = random_instance(rng, spec);
    // Every third case uses a random sparse mask.
    EdgeMask mask = EdgeMask::full(inst.n, inst.m);
    if (c % 3 == 2) {
      for (auto& v : mask.data()) v = uniform_real(rng) < 0.75 ? 1 : 0;
    }
    // Every other case mixes signs so that lower bounds bind.
    RealMatrix w = inst.quality;
    if (c % 2 == 1) {
      for (std::size_t k = 0; k < w.data().size(); ++k) {
        w.data()[k] -= inst.effort.data()[k];
      }
    }
    const auto bounds = DegreeBounds::of(inst);
    const auto solved = solve_bmatching({w, kDefaultCostScale}, mask, bounds);
    const auto brute = brute_force_best_matching(w, mask, bounds);
    ++r.cases;
    if (solved.has_value() != brute.has_value()) {
      note_failure(r, describe(inst) + ": feasibility disagrees");
      continue;
    }
    if (!solved) continue;
    const auto& x = *solved;
    bool ok = x.dominated_by(mask);
    for (std::size_t i = 0; i < inst.n; ++i) {
      const auto d = static_cast<int>(x.row_sum(i));
      ok = ok && d >= inst.min_reviews[i] && d <= inst.max_reviews[i];
    }
    for (std::size_t j = 0; j < inst.m; ++j) {
      ok = ok && static_cast<int>(x.col_sum(j)) <= inst.capacity[j];
    }
    if (!ok) {
      note_failure(r, describe(inst) + ": solver output infeasible");
    } else if (scaled_objective(w, x) != brute->scaled_value) {
      note_failure(r, describe(inst) + ": value " +
                          std::to_string(scaled_objective(w, x)) + " vs " +
                          std::to_string(brute->scaled_value));
    }
  }
  finish(r);
  return r;
}

CheckResult check_zero_freedom(std::size_t cases, std::uint64_t seed) {
  CheckResult r = named("phi = 0: heuristic quality equals the pure-quality optimum");
  std::mt19937_64 rng(seed);
  RandomInstanceSpec spec;
  spec.min_papers = 5;
  spec.max_papers = 30;
  spec.min_reviewers = 2;
  spec.max_reviewers = 10;
  spec.max_min_reviews = 2;
  spec.max_max_reviews = 3;
  spec.max_capacity = 6;
  spec.max_freedom = 0;
  while (r.cases < cases) {
    const auto inst = random_instance(rng, spec);
    const auto ilp = solve_pure_quality(inst);
    const auto bp = heuristic_solve(inst);
    if (!ilp) {
      ++r.skipped;
      continue;
    }
    ++r.cases;
    if (!bp) {
      note_failure(r, describe(inst) + ": heuristic infeasible");
      continue;
    }
    const auto q_bp = scaled_objective(inst.quality, bp->assignment);
    const auto q_ilp = scaled_objective(inst.quality, *ilp);
    if (q_bp != q_ilp || bp->accordance != 1.0) {
      std::ostringstream out;
      out << describe(inst) << ": quality " << q_bp / 1e6 << " vs "
          << q_ilp / 1e6 << ", AC " << bp->accordance;
      note_failure(r, out.str());
    }
  }
  finish(r);
  return r;
}

CheckResult check_bp_bound(std::size_t cases, std::uint64_t seed,
                           QualityBoundScope scope) {
  CheckResult r = named(scope == QualityBoundScope::kTightBounds
                            ? "heuristic vs brute-force BP optimum"
                            : "heuristic vs brute-force BP optimum, quality "
                              "bound on every instance");
  std::mt19937_64 rng(seed);
  RandomInstanceSpec spec;
  spec.min_papers = 2;
  spec.max_papers = 4;
  spec.max_reviewers = 3;
  spec.max_min_reviews = 1;
  spec.max_max_reviews = 2;
  spec.max_capacity = 2;
  spec.max_freedom = 2;
  spec.distinct_weights = true;
  std::size_t attempts = 0;
  std::size_t quality_checked = 0;
  while (r.cases < cases && attempts++ < 50 * cases) {
    spec.equal_bounds = attempts % 2 == 0;
    const auto inst = random_instance(rng, spec);
    const auto heur = heuristic_solve(inst);
    if (!heur) {
      ++r.skipped;
      continue;
    }
    std::optional<BpTriplet> best;
    try {
      best = brute_force_bp_optimum(inst);
    } catch (const GuardError&) {
      ++r.skipped;
      continue;
    }
    ++r.cases;
    if (!best) {
      note_failure(r, describe(inst) + ": oracle infeasible, heuristic feasible");
      continue;
    }
    const double tol = 1e-9;
    if (heur->bp_objective > best->bp_objective + tol) {
      std::ostringstream out;
      out << describe(inst) << ": bp objective " << heur->bp_objective << " > "
          << best->bp_objective;
      note_failure(r, out.str());
      continue;
    }
    const bool tight = inst.min_reviews == inst.max_reviews;
    if (heur->accordance == 1.0 &&
        (tight || scope == QualityBoundScope::kAllInstances)) {
      ++quality_checked;
      const double q_h = inner(inst.quality, heur->assignment);
      const double q_b = inner(inst.quality, best->assignment);
      if (q_h > q_b + tol) {
        std::ostringstream out;
        out << describe(inst) << ": perfect heuristic quality " << q_h << " > "
            << q_b;
        note_failure(r, out.str());
      }
    }
  }
  finish(r);
  r.detail += "; quality bound checked on " + std::to_string(quality_checked);
  return r;
}

CheckResult check_capacity_feasibility(std::size_t cases, std::uint64_t seed) {
  CheckResult r = named("feasible triplet under max phi + 2 max U <= n");
  std::mt19937_64 rng(seed);
  RandomInstanceSpec spec;
  spec.min_papers = 3;
  spec.max_papers = 6;
  spec.max_reviewers = 3;
  spec.max_min_reviews = 1;
  spec.max_max_reviews = 2;
  spec.max_capacity = 2;
  spec.max_freedom = 2;
  std::size_t attempts = 0;
  while (r.cases < cases && attempts++ < 100 * cases) {
    const auto inst = random_instance(rng, spec);
    if (!theorem3_check(inst) || !solve_pure_quality(inst)) continue;
    bool feasible = false;
    try {
      feasible = brute_force_bp_feasible(inst);
    } catch (const GuardError&) {
      ++r.skipped;
      continue;
    }
    ++r.cases;
    if (!feasible) note_failure(r, describe(inst) + ": no feasible triplet");
  }
  finish(r);
  return r;
}

CheckResult check_topk_feasibility(std::size_t cases, std::uint64_t seed) {
  CheckResult r = named("heuristic feasible when the top-K condition holds");
  std::mt19937_64 rng(seed);
  RandomInstanceSpec spec;
  spec.min_papers = 6;
  spec.max_papers = 14;
  spec.min_reviewers = 4;
  spec.max_reviewers = 12;
  spec.max_min_reviews = 1;
  spec.max_max_reviews = 2;
  spec.max_capacity = 2;
  spec.max_freedom = 2;
  std::size_t attempts = 0;
  while (r.cases < cases && attempts++ < 1000 * cases) {
    auto inst = random_instance(rng, spec);
    // Few papers with l_i = 1 keep L small enough for the condition.
    for (auto& l : inst.min_reviews) {
      if (uniform_real(rng) < 0.7) l = 0;
    }
    if (!validate_instance(inst).empty() || !theorem4_check(inst)) continue;
    ++r.cases;
    if (!heuristic_solve(inst)) {
      note_failure(r, describe(inst) + ": heuristic infeasible");
    }
  }
  finish(r);
  return r;
}

CheckResult check_fractional_dominance(std::size_t samples,
                                       std::uint64_t seed) {
  CheckResult r = named("sorted prefix bounds every fractional selection");
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto b = uniform_int<std::size_t>(rng, 2, 12);
    const auto a = uniform_int<std::size_t>(rng, 1, b - 1);
    std::vector<double> w(b);
    for (auto& v : w) v = 1e-3 + uniform_real(rng);
    std::sort(w.begin(), w.end());
    // Start uniform at a / b and shuffle mass between coordinates.
    std::vector<double> x(b, static_cast<double>(a) / static_cast<double>(b));
    for (std::size_t step = 0; step < 4 * b; ++step) {
      const auto i = uniform_int<std::size_t>(rng, 0, b - 1);
      const auto k = uniform_int<std::size_t>(rng, 0, b - 1);
      if (i == k) continue;
      const double delta = uniform_real(rng) * std::min(1.0 - x[i], x[k]);
      x[i] += delta;
      x[k] -= delta;
    }
    double prefix = 0.0, mixed = 0.0;
    for (std::size_t i = 0; i < a; ++i) prefix += w[i];
    for (std::size_t i = 0; i < b; ++i) mixed += w[i] * x[i];
    ++r.cases;
    if (prefix > mixed + 1e-12) {
      std::ostringstream out;
      out.precision(17);
      out << "b=" << b << " a=" << a << ": " << prefix << " > " << mixed;
      note_failure(r, out.str());
    }
  }
  finish(r);
  return r;
}

CheckResult check_bid_enumeration(std::size_t cases, std::uint64_t seed) {
  CheckResult r = named("bid equals the minimum over all subsets");
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const auto n = uniform_int<std::size_t>(rng, 1, 10);
    const int cap = uniform_int(rng, 1, static_cast<int>(std::min<std::size_t>(3, n)));
    std::vector<std::uint8_t> proposal(n, 0);
    std::vector<long> milli(n);
    std::vector<double> effort(n);
    for (std::size_t i = 0; i < n; ++i) {
      proposal[i] = uniform_real(rng) < 0.7 ? 1 : 0;
      milli[i] = uniform_int<long>(rng, 1, 1000);
      effort[i] = static_cast<double>(milli[i]) / 1000.0;
    }
    // Top up so that at least `cap` papers are proposed.
    for (std::size_t i = 0;
         std::count(proposal.begin(), proposal.end(), 1) < cap; ++i) {
      proposal[i] = 1;
    }
    long best = std::numeric_limits<long>::max();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != cap) continue;
      long total = 0;
      bool allowed = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1u)) continue;
        allowed = allowed && proposal[i];
        total += milli[i];
      }
      if (allowed) best = std::min(best, total);
    }
    const auto bid = bid_reviewer(proposal, effort, cap);
    long got = 0;
    double got_real = 0.0;
    for (auto i : bid.selected) {
      got += milli[i];
      got_real += effort[i];
    }
    ++r.cases;
    if (bid.selected.size() != static_cast<std::size_t>(cap) || got != best ||
        got_real != bid.effort_total) {
      note_failure(r, "n=" + std::to_string(n) + " U=" + std::to_string(cap) +
                          ": bid " + std::to_string(got) + " vs subsets " +
                          std::to_string(best));
    }
  }
  finish(r);
  return r;
}

CheckResult check_pathological_instance() {
  CheckResult r = named("three papers, two reviewers: infeasible, then repaired");
  ProblemInstance inst;
  inst.n = 3;
  inst.m = 2;
  inst.min_reviews = {1, 1, 1};
  inst.max_reviews = {1, 1, 1};
  inst.capacity = {2, 2};
  inst.freedom = {1, 1};
  inst.quality = RealMatrix(3, 2, {0.9, 0.1, 0.5, 0.8, 0.3, 0.7});
  inst.effort = RealMatrix(3, 2, {11, 3, 10, 2, 1, 1});

  ++r.cases;
  if (heuristic_solve(inst)) note_failure(r, "heuristic feasible at U=(2,2)");
  ++r.cases;
  if (brute_force_bp_optimum(inst)) note_failure(r, "oracle feasible at U=(2,2)");

  inst.capacity = {2, 1};
  ++r.cases;
  if (!brute_force_bp_optimum(inst)) note_failure(r, "oracle infeasible at U=(2,1)");
  ++r.cases;
  if (!heuristic_solve(inst)) note_failure(r, "heuristic infeasible at U=(2,1)");
  finish(r);
  return r;
}

CheckResult check_f1_identity(std::size_t cases, std::uint64_t seed) {
  CheckResult r = named("F_1 equals <W, X>");
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const auto n = uniform_int<std::size_t>(rng, 1, 8);
    const auto m = uniform_int<std::size_t>(rng, 1, 8);
    RealMatrix w(n, m);
    Matching x(n, m);
    for (auto& v : w.data()) v = uniform_int<long>(rng, 0, 1024) / 1024.0;
    for (auto& v : x.data()) v = uniform_real(rng) < 0.5 ? 1 : 0;
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t j = 0; j < m; ++j) {
      if (blocks.empty() || uniform_real(rng) < 0.5) blocks.emplace_back();
      blocks.back().push_back(j);
    }
    const ReviewerPartition part(std::move(blocks), m);
    ++r.cases;
    if (weighted_p_diversity(x, w, part, 1.0) != inner(w, x)) {
      note_failure(r, "n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  finish(r);
  return r;
}

CheckResult check_two_row_penalties() {
  CheckResult r = named("clustered vs split allocation of L1");
  const ReviewerPartition part({{0, 1}, {2}}, 3);
  RealMatrix w(3, 3, 1.0);
  w(0, 0) = 0.1;
  w(0, 1) = 0.1;
  w(0, 2) = 0.9;
  const Edge same[] = {{0, 0}, {0, 1}};
  const Edge split[] = {{0, 0}, {0, 2}};
  const auto x_same = Matching::from_edges(3, 3, same);
  const auto x_split = Matching::from_edges(3, 3, split);
  auto expect = [&](const char* what, double got, double want) {
    ++r.cases;
    if (std::fabs(got - want) > 1e-12) {
      std::ostringstream out;
      out.precision(17);
      out << what << " = " << got << ", expected " << want;
      note_failure(r, out.str());
    }
  };
  expect("F_2(clustered)", weighted_p_diversity(x_same, w, part, 2.0), 0.04);
  expect("F_2(split)", weighted_p_diversity(x_split, w, part, 2.0), 0.82);
  expect("D(clustered)", diversity(x_same, part), 4.0);
  expect("D(split)", diversity(x_split, part), 2.0);
  finish(r);
  return r;
}

CheckResult check_small_lambda(std::size_t cases, std::uint64_t seed) {
  CheckResult r = named("lambda = 0.9 / Delta C keeps maximizers quality-optimal");
  std::mt19937_64 rng(seed);
  RandomInstanceSpec spec;
  spec.min_papers = 2;
  spec.max_papers = 4;
  spec.min_reviewers = 2;
  spec.max_reviewers = 4;
  spec.max_min_reviews = 2;
  spec.max_max_reviews = 2;
  spec.max_capacity = 3;
  spec.integer_weights = true;
  const PenaltyKind kinds[] = {PenaltyKind::kWeightedDiversity,
                               PenaltyKind::kEntropy, PenaltyKind::kDiversity};
  std::size_t attempts = 0;
  while (r.cases < cases && attempts++ < 20 * cases) {
    const auto inst = random_instance(rng, spec);
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t j = 0; j < inst.m; ++j) {
      if (blocks.empty() || uniform_real(rng) < 0.5) blocks.emplace_back();
      blocks.back().push_back(j);
    }
    const ReviewerPartition part(std::move(blocks), inst.m);
    const auto mask = EdgeMask::full(inst.n, inst.m);
    const auto bounds = DegreeBounds::of(inst);
    std::optional<BruteForceOptimum> best;
    try {
      best = brute_force_best_matching(inst.quality, mask, bounds);
    } catch (const GuardError&) {
      ++r.skipped;
      continue;
    }
    if (!best) continue;
    ++r.cases;
    for (auto kind : kinds) {
      SvpConfig cfg;
      cfg.penalty = kind;
      const auto probe = svp_enumerate(inst.quality, mask, bounds, part, cfg);
      cfg.lambda = probe.delta_penalty > 0.0 ? 0.9 / probe.delta_penalty : 1.0;
      const auto res = svp_enumerate(inst.quality, mask, bounds, part, cfg);
      for (const auto& x : res.maximizers) {
        if (scaled_objective(inst.quality, x) != best->scaled_value) {
          note_failure(r, describe(inst) + ": penalty " +
                              std::to_string(static_cast<int>(kind)) +
                              " picked a quality-suboptimal matching");
          break;
        }
      }
    }
  }
  finish(r);
  return r;
}

std::vector<CheckResult> run_all_checks(std::size_t cases, std::uint64_t seed) {
  return {
      check_solver_oracle(cases, seed),
      check_zero_freedom(cases, seed),
      check_bp_bound(cases, seed, QualityBoundScope::kTightBounds),
      check_capacity_feasibility(cases, seed),
      check_topk_feasibility(cases, seed),
      check_fractional_dominance(cases, seed),
      check_bid_enumeration(cases, seed),
      check_pathological_instance(),
      check_f1_identity(cases, seed),
      check_two_row_penalties(),
      check_small_lambda(cases, seed),
  };
}

}  // namespace revassign
