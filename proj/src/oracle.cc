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

#include "revassign/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace revassign {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // out * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = n - k + i;
    if (out > kSaturated / num) return kSaturated;
    out = out * num / i;
  }
  return out;
}

// Visits every k-subset of `items` in lexicographic order. The visitor
// returns false to stop early; the function returns false if stopped.
template <typename Visit>
bool for_each_combination(std::span<const std::size_t> items, std::size_t k,
                          Visit&& visit) {
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (chosen.size() == k) return visit(std::span<const std::size_t>(chosen));
    const std::size_t remaining = k - chosen.size();
    for (std::size_t p = start; p + remaining <= items.size(); ++p) {
      chosen.push_back(items[p]);
      const bool go_on = self(self, p + 1);
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

class MatchingEnumerator {
 public:
  MatchingEnumerator(const DegreeBounds& bounds, const EdgeMask& mask)
      : bounds_(bounds),
        current_(mask.rows(), mask.cols()),
        load_(mask.cols(), 0) {
    allowed_.resize(mask.rows());
    for (std::size_t i = 0; i < mask.rows(); ++i) {
      for (std::size_t j = 0; j < mask.cols(); ++j) {
        if (mask(i, j)) allowed_[i].push_back(j);
      }
    }
  }

  // Returns false if the visitor stopped the enumeration.
  bool run(const std::function<bool(const Matching&)>& visit) {
    visit_ = &visit;
    return paper(0);
  }

 private:
  bool paper(std::size_t i) {
    if (i == current_.rows()) return (*visit_)(current_);
    const auto lo = static_cast<std::size_t>(bounds_.min_reviews[i]);
    const auto hi = std::min(static_cast<std::size_t>(bounds_.max_reviews[i]),
                             allowed_[i].size());
    for (std::size_t s = lo; s <= hi; ++s) {
      const bool go_on = for_each_combination(
          allowed_[i], s, [&](std::span<const std::size_t> reviewers) {
            for (auto j : reviewers) {
              if (load_[j] >= bounds_.capacity[j]) return true;
            }
            for (auto j : reviewers) {
              ++load_[j];
              current_(i, j) = 1;
            }
            const bool keep = paper(i + 1);
            for (auto j : reviewers) {
              --load_[j];
              current_(i, j) = 0;
            }
            return keep;
          });
      if (!go_on) return false;
    }
    return true;
  }

  const DegreeBounds& bounds_;
  std::vector<std::vector<std::size_t>> allowed_;
  Matching current_;
  std::vector<int> load_;
  const std::function<bool(const Matching&)>* visit_ = nullptr;
};

void check_shapes(const DegreeBounds& bounds, const EdgeMask& mask) {
  if (bounds.min_reviews.size() != mask.rows() ||
      bounds.max_reviews.size() != mask.rows() ||
      bounds.capacity.size() != mask.cols()) {
    throw std::invalid_argument("degree bounds do not match mask shape");
  }
  for (std::size_t i = 0; i < mask.rows(); ++i) {
    if (bounds.min_reviews[i] < 0 ||
        bounds.min_reviews[i] > bounds.max_reviews[i]) {
      throw std::invalid_argument("invalid bounds for paper " +
                                  std::to_string(i + 1));
    }
  }
}

void enforce_guard(std::uint64_t space, EnumerationGuard guard,
                   const char* what) {
  if (space > guard.max_candidates) {
    throw GuardError(std::string("instance too large for enumeration (") +
                     what + ": " + std::to_string(space) + " > " +
                     std::to_string(guard.max_candidates) + ")");
  }
}

// Lists feasible X under a mask, stopping when `visit` returns false.
bool enumerate_until(const DegreeBounds& bounds, const EdgeMask& mask,
                     EnumerationGuard guard,
                     const std::function<bool(const Matching&)>& visit) {
  check_shapes(bounds, mask);
  enforce_guard(matching_search_space(bounds, mask), guard, "matchings");
  MatchingEnumerator e(bounds, mask);
  return e.run(visit);
}

std::uint64_t proposal_space(const ProblemInstance& inst) {
  std::uint64_t space = 1;
  for (std::size_t j = 0; j < inst.m; ++j) {
    space = saturating_mul(
        space, binomial(inst.n, static_cast<std::uint64_t>(
                                    inst.capacity[j] + inst.freedom[j])));
  }
  return space;
}

// Calls visit(Z) for every proposal with column sums U + phi.
bool for_each_proposal(const ProblemInstance& inst, EnumerationGuard guard,
                       const std::function<bool(const Matching&)>& visit) {
  for (std::size_t j = 0; j < inst.m; ++j) {
    const long long size =
        static_cast<long long>(inst.capacity[j]) + inst.freedom[j];
    if (size < 0 || size > static_cast<long long>(inst.n)) {
      throw std::invalid_argument("U_j + phi_j outside [0, n] for reviewer " +
                                  std::to_string(j + 1));
    }
  }
  enforce_guard(proposal_space(inst), guard, "proposals");
  std::vector<std::size_t> papers(inst.n);
  for (std::size_t i = 0; i < inst.n; ++i) papers[i] = i;
  Matching z(inst.n, inst.m);
  auto column = [&](auto&& self, std::size_t j) -> bool {
    if (j == inst.m) return visit(z);
    const auto size =
        static_cast<std::size_t>(inst.capacity[j] + inst.freedom[j]);
    return for_each_combination(papers, size,
                                [&](std::span<const std::size_t> picked) {
                                  for (auto i : picked) z(i, j) = 1;
                                  const bool keep = self(self, j + 1);
                                  for (auto i : picked) z(i, j) = 0;
                                  return keep;
                                });
  };
  return column(column, 0);
}

// Calls visit(Y) for every combination of column-wise optimal bids.
bool for_each_optimal_bidding(
    const ProblemInstance& inst, const Matching& z,
    const std::function<bool(const Matching&)>& visit) {
  std::vector<std::vector<std::vector<std::size_t>>> options(inst.m);
  for (std::size_t j = 0; j < inst.m; ++j) {
    options[j] =
        optimal_bid_sets(z.column(j), inst.effort.column(j), inst.capacity[j]);
  }
  Matching y(inst.n, inst.m);
  auto column = [&](auto&& self, std::size_t j) -> bool {
    if (j == inst.m) return visit(y);
    for (const auto& bid : options[j]) {
      for (auto i : bid) y(i, j) = 1;
      const bool keep = self(self, j + 1);
      for (auto i : bid) y(i, j) = 0;
      if (!keep) return false;
    }
    return true;
  };
  return column(column, 0);
}

}  // namespace

std::uint64_t matching_search_space(const DegreeBounds& bounds,
                                    const EdgeMask& mask) {
  check_shapes(bounds, mask);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < mask.rows(); ++i) {
    const auto allowed = static_cast<std::uint64_t>(mask.row_sum(i));
    std::uint64_t row_options = 0;
    for (int s = bounds.min_reviews[i]; s <= bounds.max_reviews[i]; ++s) {
      const auto c = binomial(allowed, static_cast<std::uint64_t>(s));
      row_options = (row_options > kSaturated - c) ? kSaturated : row_options + c;
    }
    space = saturating_mul(space, row_options);
  }
  return space;
}

void for_each_feasible_matching(
    const DegreeBounds& bounds, const EdgeMask& mask,
    const std::function<void(const Matching&)>& visit,
    EnumerationGuard guard) {
  enumerate_until(bounds, mask, guard, [&](const Matching& x) {
    visit(x);
    return true;
  });
}

std::vector<Matching> enumerate_feasible_matchings(const DegreeBounds& bounds,
                                                   const EdgeMask& mask,
                                                   EnumerationGuard guard) {
  std::vector<Matching> out;
  for_each_feasible_matching(
      bounds, mask, [&](const Matching& x) { out.push_back(x); }, guard);
  return out;
}

std::int64_t scaled_objective(const RealMatrix& weights, const Matching& x,
                              std::int64_t cost_scale) {
  if (!weights.same_shape(x)) {
    throw std::invalid_argument("scaled_objective: shape mismatch");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (x(i, j)) total += scaled_weight(weights(i, j), cost_scale);
    }
  }
  return total;
}

std::optional<BruteForceOptimum> brute_force_best_matching(
    const RealMatrix& weights, const EdgeMask& mask, const DegreeBounds& bounds,
    std::int64_t cost_scale, EnumerationGuard guard) {
  if (!weights.same_shape(mask)) {
    throw std::invalid_argument("brute_force_best_matching: shape mismatch");
  }
  Matrix<std::int64_t> scaled(mask.rows(), mask.cols());
  for (std::size_t i = 0; i < mask.rows(); ++i) {
    for (std::size_t j = 0; j < mask.cols(); ++j) {
      scaled(i, j) = scaled_weight(weights(i, j), cost_scale);
    }
  }
  std::optional<BruteForceOptimum> best;
  std::size_t count = 0;
  enumerate_until(bounds, mask, guard, [&](const Matching& x) {
    ++count;
    std::int64_t value = 0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) {
        if (x(i, j)) value += scaled(i, j);
      }
    }
    if (!best || value > best->scaled_value) {
      best = BruteForceOptimum{x, value, 0};
    }
    return true;
  });
  if (best) best->feasible_count = count;
  return best;
}

std::vector<std::vector<std::size_t>> optimal_bid_sets(
    std::span<const std::uint8_t> proposal_col,
    std::span<const double> effort_col, int capacity) {
  if (proposal_col.size() != effort_col.size() || capacity < 0) {
    throw std::invalid_argument("optimal_bid_sets: bad arguments");
  }
  std::vector<std::size_t> proposed;
  for (std::size_t i = 0; i < proposal_col.size(); ++i) {
    if (proposal_col[i]) proposed.push_back(i);
  }
  if (proposed.size() < static_cast<std::size_t>(capacity)) {
    throw std::invalid_argument("proposal too small");
  }
  std::vector<std::pair<double, std::vector<std::size_t>>> all;
  double best = std::numeric_limits<double>::infinity();
  for_each_combination(proposed, static_cast<std::size_t>(capacity),
                       [&](std::span<const std::size_t> subset) {
                         double total = 0.0;
                         for (auto i : subset) total += effort_col[i];
                         best = std::min(best, total);
                         all.emplace_back(total, std::vector<std::size_t>(
                                                     subset.begin(),
                                                     subset.end()));
                         return true;
                       });
  // Equal multisets of efforts can sum differently in the last ulp.
  const double tol = 1e-9 * std::max(1.0, std::fabs(best));
  std::vector<std::vector<std::size_t>> out;
  for (auto& [total, subset] : all) {
    if (total <= best + tol) out.push_back(std::move(subset));
  }
  return out;
}

std::optional<BpTriplet> brute_force_bp_optimum(const ProblemInstance& inst,
                                                EnumerationGuard guard) {
  const auto bounds = DegreeBounds::of(inst);
  std::optional<BpTriplet> best;
  std::int64_t best_value = std::numeric_limits<std::int64_t>::min();

  Matrix<std::int64_t> scaled_quality(inst.n, inst.m);
  for (std::size_t i = 0; i < inst.n; ++i) {
    for (std::size_t j = 0; j < inst.m; ++j) {
      scaled_quality(i, j) =
          scaled_weight(inst.quality(i, j), kDefaultCostScale);
    }
  }

  for_each_proposal(inst, guard, [&](const Matching& z) {
    return for_each_optimal_bidding(inst, z, [&](const Matching& y) {
      const auto mask = EdgeMask::consistency(z, y);
      enumerate_until(bounds, mask, guard, [&](const Matching& x) {
        std::int64_t value = 0;
        for (std::size_t i = 0; i < inst.n; ++i) {
          for (std::size_t j = 0; j < inst.m; ++j) {
            if (!x(i, j)) continue;
            value += scaled_quality(i, j);
            if (y(i, j)) value += kDefaultCostScale;
          }
        }
        if (value > best_value) {
          best_value = value;
          BpTriplet t;
          t.assignment = x;
          t.bidding = y;
          t.proposal = z;
          t.bp_objective = inner(inst.quality, x) +
                           static_cast<double>(overlap(x, y));
          t.accordance = accordance(x, y);
          best = std::move(t);
        }
        return true;
      });
      return true;
    });
  });
  return best;
}

bool brute_force_bp_feasible(const ProblemInstance& inst,
                             EnumerationGuard guard) {
  const auto bounds = DegreeBounds::of(inst);
  bool found = false;
  for_each_proposal(inst, guard, [&](const Matching& z) {
    for_each_optimal_bidding(inst, z, [&](const Matching& y) {
      enumerate_until(bounds, EdgeMask::consistency(z, y), guard,
                      [&](const Matching&) {
                        found = true;
                        return false;
                      });
      return !found;
    });
    return !found;
  });
  return found;
}

bool exists_perfect_quality_maximal_triplet(const ProblemInstance& inst,
                                            EnumerationGuard guard) {
  const auto bounds = DegreeBounds::of(inst);
  const auto optimum = brute_force_best_matching(
      inst.quality, EdgeMask::full(inst.n, inst.m), bounds, kDefaultCostScale,
      guard);
  if (!optimum) return false;
  bool found = false;
  for_each_proposal(inst, guard, [&](const Matching& z) {
    for_each_optimal_bidding(inst, z, [&](const Matching& y) {
      // X <= Y implies X <= E - Z + Y, so Y itself is the mask.
      EdgeMask mask(inst.n, inst.m);
      for (std::size_t i = 0; i < inst.n; ++i) {
        for (std::size_t j = 0; j < inst.m; ++j) mask(i, j) = y(i, j);
      }
      const auto best = brute_force_best_matching(
          inst.quality, mask, bounds, kDefaultCostScale, guard);
      if (best && best->scaled_value == optimum->scaled_value) found = true;
      return !found;
    });
    return !found;
  });
  return found;
}

std::vector<Matching> pure_quality_optima(const ProblemInstance& inst,
                                          EnumerationGuard guard) {
  const auto bounds = DegreeBounds::of(inst);
  const auto mask = EdgeMask::full(inst.n, inst.m);
  std::vector<std::pair<std::int64_t, Matching>> all;
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for_each_feasible_matching(
      bounds, mask,
      [&](const Matching& x) {
        const auto value = scaled_objective(inst.quality, x);
        best = std::max(best, value);
        all.emplace_back(value, x);
      },
      guard);
  std::vector<Matching> out;
  for (auto& [value, x] : all) {
    if (value == best) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace revassign
