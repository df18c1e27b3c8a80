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

#ifndef REVASSIGN_DATAGEN_H_
#define REVASSIGN_DATAGEN_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "revassign/matrix.h"

namespace revassign {

inline constexpr std::size_t kUiucTopics = 25;
inline constexpr double kDefaultPositivityFloor = 1e-6;

// Nonnegative topic vectors, one row per paper / reviewer.
struct TopicVectors {
  RealMatrix papers;     // n x r
  RealMatrix reviewers;  // m x r
};

// (W_E)_ij = <v_p_i, v_r_j>; if `normalize`, divided by the global maximum.
RealMatrix quality_from_topics(const TopicVectors& tv, bool normalize);

enum class EffortFamily { kAligned, kUniform, kExponential };

struct EffortGenConfig {
  EffortFamily family = EffortFamily::kAligned;
  double sigma = 0.1;  // aligned: standard deviation of the Gaussian noise
  double rate = 0.5;   // exponential: rate parameter (mean 1 / rate)
  std::uint64_t seed = 0;
  double positivity_floor = kDefaultPositivityFloor;
};

// (W_R)_ij = K - (W_E)_ij - chi_ij, K = max(W_E) + 1, chi ~ N(0, sigma),
// clamped below at the positivity floor. sigma == 0 disables the noise.
RealMatrix gen_aligned(const RealMatrix& quality, const EffortGenConfig& cfg);

// I.i.d. entries: uniform on (floor, 1] or exponential(rate) by inverse CDF.
RealMatrix gen_random(std::size_t n, std::size_t m, const EffortGenConfig& cfg);

// Dispatches on cfg.family.
RealMatrix gen_effort(const RealMatrix& quality, const EffortGenConfig& cfg);

// Seeded sparse nonnegative topic vectors standing in for the UIUC data.
TopicVectors synthetic_topics(std::size_t n, std::size_t m, std::size_t r,
                              std::uint64_t seed);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::size_t line,
             const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Rows of nonnegative reals, whitespace or comma separated. Blank lines and
// lines starting with '#' are skipped. Every row must have `width` fields.
RealMatrix load_topic_rows(const std::string& path, std::size_t width);

struct UiucLoad {
  TopicVectors vectors;
  std::vector<std::string> warnings;  // e.g. an empty input file
};

UiucLoad load_uiuc(const std::string& papers_path,
                   const std::string& reviewers_path);

}  // namespace revassign

#endif  // REVASSIGN_DATAGEN_H_
