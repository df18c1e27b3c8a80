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

#include "revassign/experiment.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "revassign/json_io.h"

namespace revassign {
namespace {

SweepConfig small_config() {
  SweepConfig cfg;
  cfg.synthetic_papers = 16;
  cfg.synthetic_reviewers = 24;
  cfg.synthetic_topics = 6;
  cfg.min_reviews = 1;
  cfg.max_reviews = 2;
  cfg.capacities = {2, 3};
  cfg.freedom_fractions = {0.5, 1.0};
  cfg.families = {{EffortFamily::kAligned, 0.1},
                  {EffortFamily::kExponential, 0.5}};
  cfg.t_grid = {0.1};
  cfg.replications = 4;
  cfg.threads = 1;
  return cfg;
}

void expect_same_rows(const std::vector<SweepResultRow>& a,
                      const std::vector<SweepResultRow>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].framework, b[k].framework);
    EXPECT_EQ(a[k].capacity, b[k].capacity);
    EXPECT_EQ(a[k].freedom, b[k].freedom);
    EXPECT_EQ(a[k].t, b[k].t);
    EXPECT_EQ(a[k].qp, b[k].qp);
    EXPECT_EQ(a[k].raer, b[k].raer);
    EXPECT_EQ(a[k].fr, b[k].fr);
    EXPECT_EQ(a[k].ac, b[k].ac);
    EXPECT_EQ(a[k].replications, b[k].replications);
    EXPECT_EQ(a[k].infeasible, b[k].infeasible);
  }
}

TEST(FreedomForTest, FloorOfFraction) {
  EXPECT_EQ(freedom_for(6, 0.5), 3);
  EXPECT_EQ(freedom_for(6, 0.75), 4);
  EXPECT_EQ(freedom_for(6, 1.0), 6);
  EXPECT_EQ(freedom_for(8, 0.75), 6);
  EXPECT_EQ(freedom_for(10, 0.3), 3);  // 0.3 * 10 is 2.9999999999999996
}

TEST(FamilySpecTest, Labels) {
  EXPECT_EQ((FamilySpec{EffortFamily::kAligned, 0.1}).label(),
            "aligned(sigma=0.1)");
  EXPECT_EQ((FamilySpec{EffortFamily::kUniform, 0.0}).label(), "uniform");
  EXPECT_EQ((FamilySpec{EffortFamily::kExponential, 0.5}).label(),
            "exponential(rate=0.5)");
}

TEST(SweepConfigTest, DefaultsValidate) { EXPECT_NO_THROW(SweepConfig{}.validate()); }

TEST(SweepConfigTest, ValidateRejectsBadGrids) {
  auto cfg = small_config();
  cfg.capacities.clear();
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.replications = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.t_grid = {1.5};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.papers_path = "papers.txt";
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(SweepConfigTest, JsonRoundTrip) {
  const auto cfg = small_config();
  const auto back = sweep_config_from_json(sweep_config_to_json(cfg));
  EXPECT_EQ(back.capacities, cfg.capacities);
  EXPECT_EQ(back.freedom_fractions, cfg.freedom_fractions);
  EXPECT_EQ(back.families, cfg.families);
  EXPECT_EQ(back.t_grid, cfg.t_grid);
  EXPECT_EQ(back.replications, cfg.replications);
  EXPECT_EQ(back.min_reviews, cfg.min_reviews);
  EXPECT_EQ(back.synthetic_topics, cfg.synthetic_topics);
}

TEST(SweepConfigTest, UnknownKeysAreRejected) {
  EXPECT_THROW(sweep_config_from_json(R"({"replicas": 3})"), FormatError);
  EXPECT_THROW(sweep_config_from_json(R"({"U": "six"})"), FormatError);
  const auto cfg = sweep_config_from_json(R"({"U": [4], "seed": 9})");
  EXPECT_EQ(cfg.capacities, std::vector<int>{4});
  EXPECT_EQ(cfg.base_seed, 9u);
  EXPECT_EQ(cfg.replications, SweepConfig{}.replications);
}

TEST(RunSweepTest, RowLayout) {
  const auto cfg = small_config();
  const auto report = run_sweep(cfg);
  EXPECT_TRUE(report.synthetic_quality);
  // 2 U x 2 phi x 2 families, each a head row plus one row per t.
  ASSERT_EQ(report.rows.size(), 16u);
  const auto& head = report.rows[0];
  EXPECT_FALSE(head.t.has_value());
  EXPECT_TRUE(head.ac.has_value());
  EXPECT_EQ(head.replications + head.infeasible, cfg.replications);
  EXPECT_EQ(report.rows[1].t, 0.1);
  EXPECT_FALSE(report.rows[1].ac.has_value());
  for (const auto& row : report.rows) {
    if (row.aborted) continue;
    EXPECT_GT(row.qp, 0.0);
    EXPECT_LE(row.qp, 1.0 + 1e-9);
    if (row.ac) {
      EXPECT_GE(*row.ac, 0.0);
      EXPECT_LE(*row.ac, 1.0);
    }
  }
}

TEST(RunSweepTest, DeterministicAcrossThreadCounts) {
  auto cfg = small_config();
  const auto one = run_sweep(cfg);
  cfg.threads = 3;
  const auto three = run_sweep(cfg);
  expect_same_rows(one.rows, three.rows);
  cfg.base_seed = 1;
  const auto other = run_sweep(cfg);
  bool differs = false;
  for (std::size_t k = 0; k < other.rows.size(); ++k) {
    differs = differs || other.rows[k].fr != one.rows[k].fr;
  }
  EXPECT_TRUE(differs);
}

std::vector<SweepResultRow> grid_rows(int capacity) {
  std::vector<SweepResultRow> rows;
  const SweepConfig cfg;
  for (const auto& fam : cfg.families) {
    for (double frac : cfg.freedom_fractions) {
      SweepResultRow r;
      r.framework = fam.label();
      r.capacity = capacity;
      r.freedom = freedom_for(capacity, frac);
      r.qp = 0.98765;
      r.raer = 0.5;
      r.fr = 0.25;
      r.ac = 1.0;
      r.replications = 25;
      rows.push_back(r);
    }
  }
  return rows;
}

TEST(EmitTableTest, EmptyInputThrows) {
  EXPECT_THROW(emit_table({}, TableFormat::kCsv), std::invalid_argument);
  EXPECT_THROW(emit_table({}, TableFormat::kMarkdown), std::invalid_argument);
}

TEST(EmitTableTest, CsvLines) {
  const auto rows = grid_rows(8);
  const auto text = emit_table(rows, TableFormat::kCsv);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "framework,U,phi,t,metric,mean,replications,infeasible");
  std::getline(in, line);
  EXPECT_EQ(line, "aligned(sigma=0.1),8,4,,QP,0.987650,25,0");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 12 * 4);
}

TEST(EmitTableTest, MarkdownShape) {
  const auto rows = grid_rows(8);
  const auto text = emit_table(rows, TableFormat::kMarkdown, true);
  EXPECT_EQ(text.rfind("> synthetic W_E", 0), 0u);
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> table;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '|') table.push_back(line);
  }
  // header, rule, 4 metrics, 2 counts
  ASSERT_EQ(table.size(), 8u);
  for (const auto& l : table) {
    EXPECT_EQ(std::count(l.begin(), l.end(), '|'), 14) << l;
  }
  EXPECT_NE(table[2].find("0.9877"), std::string::npos) << table[2];
  EXPECT_NE(table[6].find(" 25 "), std::string::npos) << table[6];
}

TEST(EmitTableTest, FormatNames) {
  EXPECT_EQ(parse_table_format("csv"), TableFormat::kCsv);
  EXPECT_EQ(parse_table_format("markdown"), TableFormat::kMarkdown);
  EXPECT_EQ(parse_table_format("md"), TableFormat::kMarkdown);
  EXPECT_THROW(parse_table_format("xlsx"), std::invalid_argument);
}

}  // namespace
}  // namespace revassign
