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

#include "revassign/datagen.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

namespace revassign {
namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string row(std::size_t width, const std::string& value = "0.5") {
  std::string out;
  for (std::size_t k = 0; k < width; ++k) out += (k ? "," : "") + value;
  return out + "\n";
}

double mean(const RealMatrix& m) {
  const auto d = m.data();
  return std::accumulate(d.begin(), d.end(), 0.0) / d.size();
}

TEST(QualityFromTopicsTest, DotProductsAndNormalization) {
  TopicVectors tv{RealMatrix(2, 2, {1, 0, 1, 1}), RealMatrix(2, 2, {2, 0, 1, 3})};
  const auto raw = quality_from_topics(tv, false);
  EXPECT_EQ(raw, RealMatrix(2, 2, {2, 1, 2, 4}));
  const auto norm = quality_from_topics(tv, true);
  EXPECT_EQ(norm, RealMatrix(2, 2, {0.5, 0.25, 0.5, 1.0}));
}

TEST(QualityFromTopicsTest, Errors) {
  TopicVectors tv{RealMatrix(1, 2, {1, -1}), RealMatrix(1, 2, {1, 1})};
  EXPECT_THROW(quality_from_topics(tv, true), std::invalid_argument);
  TopicVectors mismatched{RealMatrix(1, 2), RealMatrix(1, 3)};
  EXPECT_THROW(quality_from_topics(mismatched, true), std::invalid_argument);
}

TEST(QualityFromTopicsTest, AllZeroStaysZero) {
  TopicVectors tv{RealMatrix(2, 3), RealMatrix(2, 3)};
  EXPECT_EQ(quality_from_topics(tv, true), RealMatrix(2, 2));
}

TEST(GenAlignedTest, NoNoiseMirrorsQuality) {
  const RealMatrix q(2, 2, {0.2, 1.0, 0.0, 0.5});
  EffortGenConfig cfg;
  cfg.sigma = 0.0;
  const auto e = gen_aligned(q, cfg);
  EXPECT_EQ(e, RealMatrix(2, 2, {1.8, 1.0, 2.0, 1.5}));
}

TEST(GenAlignedTest, NoisyEffortsStayPositive) {
  const RealMatrix q(50, 40, 1.0);
  EffortGenConfig cfg;
  cfg.sigma = 3.0;
  cfg.seed = 9;
  const auto e = gen_aligned(q, cfg);
  const auto d = e.data();
  EXPECT_GE(*std::min_element(d.begin(), d.end()), kDefaultPositivityFloor);
  EXPECT_GT(mean(e), 1.0);  // clamping lifts the mean
}

TEST(GenAlignedTest, NoiseHasTheRequestedSpread) {
  const RealMatrix q(200, 200, 0.0);
  EffortGenConfig cfg;
  cfg.sigma = 0.1;
  cfg.seed = 4;
  const auto e = gen_aligned(q, cfg);
  double sq = 0.0;
  for (double v : e.data()) sq += (v - 1.0) * (v - 1.0);
  EXPECT_NEAR(std::sqrt(sq / e.data().size()), 0.1, 0.005);
}

TEST(GenRandomTest, ExponentialMean) {
  EffortGenConfig cfg;
  cfg.family = EffortFamily::kExponential;
  cfg.rate = 0.5;
  cfg.seed = 1;
  const auto e = gen_random(1000, 100, cfg);
  EXPECT_NEAR(mean(e), 2.0, 0.05);
}

TEST(GenRandomTest, UniformRange) {
  EffortGenConfig cfg;
  cfg.family = EffortFamily::kUniform;
  cfg.seed = 2;
  const auto e = gen_random(300, 300, cfg);
  const auto d = e.data();
  EXPECT_GT(*std::min_element(d.begin(), d.end()), 0.0);
  EXPECT_LE(*std::max_element(d.begin(), d.end()), 1.0);
  EXPECT_NEAR(mean(e), 0.5, 0.01);
}

TEST(GenRandomTest, Errors) {
  EffortGenConfig cfg;
  EXPECT_THROW(gen_random(2, 2, cfg), std::invalid_argument);  // aligned
  cfg.family = EffortFamily::kExponential;
  cfg.rate = 0.0;
  EXPECT_THROW(gen_random(2, 2, cfg), std::invalid_argument);
  cfg.family = EffortFamily::kAligned;
  cfg.sigma = -1.0;
  EXPECT_THROW(gen_aligned(RealMatrix(1, 1), cfg), std::invalid_argument);
}

TEST(GenEffortTest, SeedsReproduce) {
  const RealMatrix q(10, 8, 0.3);
  for (auto family : {EffortFamily::kAligned, EffortFamily::kUniform,
                      EffortFamily::kExponential}) {
    EffortGenConfig cfg;
    cfg.family = family;
    cfg.seed = 42;
    const auto a = gen_effort(q, cfg);
    EXPECT_EQ(a, gen_effort(q, cfg));
    cfg.seed = 43;
    EXPECT_NE(a, gen_effort(q, cfg));
    EXPECT_EQ(a.rows(), 10u);
    EXPECT_EQ(a.cols(), 8u);
  }
}

TEST(SyntheticTopicsTest, ShapeAndDeterminism) {
  const auto a = synthetic_topics(73, 189, kUiucTopics, 1);
  EXPECT_EQ(a.papers.rows(), 73u);
  EXPECT_EQ(a.reviewers.rows(), 189u);
  EXPECT_EQ(a.papers.cols(), kUiucTopics);
  const auto b = synthetic_topics(73, 189, kUiucTopics, 1);
  EXPECT_EQ(a.papers, b.papers);
  EXPECT_EQ(a.reviewers, b.reviewers);
  for (double v : a.papers.data()) EXPECT_GE(v, 0.0);
}

TEST(LoadTopicRowsTest, ParsesMixedSeparators) {
  const auto path = write_temp(
      "mixed.txt", "# header\n\n1, 2 3\n4\t5,6\r\n");
  const auto m = load_topic_rows(path, 3);
  EXPECT_EQ(m, RealMatrix(2, 3, {1, 2, 3, 4, 5, 6}));
}

TEST(LoadTopicRowsTest, ShortRowReportsItsLine) {
  const auto path = write_temp(
      "short.txt", row(kUiucTopics) + row(kUiucTopics) + row(kUiucTopics - 1));
  try {
    load_topic_rows(path, kUiucTopics);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("24"), std::string::npos);
  }
}

TEST(LoadTopicRowsTest, RejectsJunkAndNegatives) {
  EXPECT_THROW(load_topic_rows(write_temp("junk.txt", "1 x\n"), 2), ParseError);
  EXPECT_THROW(load_topic_rows(write_temp("neg.txt", "1 -2\n"), 2), ParseError);
  EXPECT_THROW(load_topic_rows("/nonexistent/topics.txt", 2),
               std::runtime_error);
}

TEST(LoadUiucTest, EmptyFileWarns) {
  const auto papers = write_temp("papers.txt", row(kUiucTopics));
  const auto reviewers = write_temp("reviewers.txt", "");
  const auto load = load_uiuc(papers, reviewers);
  ASSERT_EQ(load.warnings.size(), 1u);
  EXPECT_NE(load.warnings[0].find("reviewers.txt"), std::string::npos);
  EXPECT_EQ(load.vectors.papers.rows(), 1u);
  EXPECT_EQ(load.vectors.reviewers.rows(), 0u);
}

}  // namespace
}  // namespace revassign
