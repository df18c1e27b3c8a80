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

#ifndef REVASSIGN_EXPERIMENT_H_
#define REVASSIGN_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revassign/bmatching.h"
#include "revassign/datagen.h"
#include "revassign/matrix.h"

namespace revassign {

struct FamilySpec {
  EffortFamily family = EffortFamily::kAligned;
  double parameter = 0.1;  // sigma (aligned) or rate (exponential)

  // "aligned(sigma=0.1)", "uniform", "exponential(rate=0.5)".
  std::string label() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct SweepConfig {
  // Both empty: seeded synthetic topic vectors replace the dataset.
  std::string papers_path;
  std::string reviewers_path;
  std::size_t synthetic_papers = 73;
  std::size_t synthetic_reviewers = 189;
  std::size_t synthetic_topics = kUiucTopics;
  std::uint64_t topic_seed = 1;
  bool normalize = true;

  int min_reviews = 3;
  int max_reviews = 5;
  std::vector<int> capacities{6, 8};
  // phi = floor(fraction * U).
  std::vector<double> freedom_fractions{0.5, 0.75, 1.0};
  std::vector<FamilySpec> families{
      {EffortFamily::kAligned, 0.1},
      {EffortFamily::kAligned, 0.3},
      {EffortFamily::kUniform, 0.0},
      {EffortFamily::kExponential, 0.5},
  };
  std::vector<double> t_grid{0.05, 0.1, 0.15};
  std::size_t replications = 250;
  std::uint64_t base_seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  std::int64_t cost_scale = kDefaultCostScale;

  // Throws std::invalid_argument on empty grids, zero replications or
  // out-of-range parameters.
  void validate() const;
};

int freedom_for(int capacity, double fraction);

// Unknown keys are rejected. Missing keys keep their defaults.
SweepConfig sweep_config_from_json(std::string_view text);
std::string sweep_config_to_json(const SweepConfig& cfg);

// Means over the feasible replications of one grid cell. With t unset the
// row compares X_BP with X_ILP (QP, RAER, FR, AC); with t set it holds
// QP(X_t), RAER(X_BP, X_t) and FR(X_BP, X_t).
struct SweepResultRow {
  std::string framework;
  int capacity = 0;
  int freedom = 0;
  std::optional<double> t;
  double qp = 0.0;
  double raer = 0.0;
  double fr = 0.0;
  std::optional<double> ac;
  std::size_t replications = 0;  // feasible, averaged
  std::size_t infeasible = 0;
  std::size_t degenerate = 0;    // feasible but a ratio was undefined
  bool aborted = false;          // no replication could be averaged
};

struct SweepReport {
  std::vector<SweepResultRow> rows;
  bool synthetic_quality = false;
  std::vector<std::string> warnings;
};

RealMatrix sweep_quality(const SweepConfig& cfg, std::vector<std::string>* warnings,
                         bool* synthetic);

SweepReport run_sweep(const SweepConfig& cfg);

// Same, with a caller-provided quality matrix.
SweepReport run_sweep(const SweepConfig& cfg, const RealMatrix& quality);

enum class TableFormat { kCsv, kMarkdown };

TableFormat parse_table_format(std::string_view name);

// Throws std::invalid_argument on empty rows.
std::string emit_table(std::span<const SweepResultRow> rows, TableFormat format,
                       bool synthetic_quality = false);

// emit_table to a file; I/O errors name the path.
void write_table(const std::string& path, std::span<const SweepResultRow> rows,
                 TableFormat format, bool synthetic_quality = false);

}  // namespace revassign

#endif  // REVASSIGN_EXPERIMENT_H_
