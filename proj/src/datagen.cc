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
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>

namespace revassign {
namespace {

// 53 random bits -> [0, 1). Avoids the implementation-defined
// generate_canonical so seeds reproduce across standard libraries.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_nonnegative(const RealMatrix& m, const char* what) {
  for (double v : m.data()) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string(what) +
                                  " contains a negative or non-finite entry");
    }
  }
}

}  // namespace

RealMatrix quality_from_topics(const TopicVectors& tv, bool normalize) {
  if (tv.papers.cols() != tv.reviewers.cols()) {
    throw std::invalid_argument("paper and reviewer topic dimensions differ");
  }
  check_nonnegative(tv.papers, "paper topic vectors");
  check_nonnegative(tv.reviewers, "reviewer topic vectors");
  const auto n = tv.papers.rows();
  const auto m = tv.reviewers.rows();
  const auto r = tv.papers.cols();
  RealMatrix w(n, m);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < r; ++k) {
        dot += tv.papers(i, k) * tv.reviewers(j, k);
      }
      w(i, j) = dot;
      peak = std::max(peak, dot);
    }
  }
  if (normalize && peak > 0.0) {
    for (double& v : w.data()) v /= peak;
  }
  return w;
}

RealMatrix gen_aligned(const RealMatrix& quality, const EffortGenConfig& cfg) {
  if (cfg.sigma < 0.0) throw std::invalid_argument("sigma must be >= 0");
  if (!(cfg.positivity_floor > 0.0)) {
    throw std::invalid_argument("positivity floor must be > 0");
  }
  double peak = 0.0;
  for (double v : quality.data()) peak = std::max(peak, v);
  const double k = peak + 1.0;

  std::mt19937_64 rng(cfg.seed);
  RealMatrix out(quality.rows(), quality.cols());
  for (std::size_t i = 0; i < quality.rows(); ++i) {
    for (std::size_t j = 0; j < quality.cols(); ++j) {
      double chi = 0.0;
      if (cfg.sigma > 0.0) {
        // Box-Muller on two explicit draws.
        const double u1 = 1.0 - unit_draw(rng);
        const double u2 = unit_draw(rng);
        chi = cfg.sigma * std::sqrt(-2.0 * std::log(u1)) *
              std::cos(2.0 * M_PI * u2);
      }
      out(i, j) = std::max(cfg.positivity_floor, k - quality(i, j) - chi);
    }
  }
  return out;
}

RealMatrix gen_random(std::size_t n, std::size_t m, const EffortGenConfig& cfg) {
  if (!(cfg.positivity_floor > 0.0)) {
    throw std::invalid_argument("positivity floor must be > 0");
  }
  if (cfg.family == EffortFamily::kExponential && !(cfg.rate > 0.0)) {
    throw std::invalid_argument("exponential rate must be > 0");
  }
  if (cfg.family == EffortFamily::kAligned) {
    throw std::invalid_argument("aligned efforts need a quality matrix");
  }
  std::mt19937_64 rng(cfg.seed);
  RealMatrix out(n, m);
  for (double& v : out.data()) {
    const double u = 1.0 - unit_draw(rng);  // (0, 1]
    const double draw = cfg.family == EffortFamily::kUniform
                            ? u
                            : -std::log(u) / cfg.rate;
    v = std::max(cfg.positivity_floor, draw);
  }
  return out;
}

RealMatrix gen_effort(const RealMatrix& quality, const EffortGenConfig& cfg) {
  if (cfg.family == EffortFamily::kAligned) return gen_aligned(quality, cfg);
  return gen_random(quality.rows(), quality.cols(), cfg);
}

TopicVectors synthetic_topics(std::size_t n, std::size_t m, std::size_t r,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // A paper carries 1-3 topics, a reviewer 2-5, with random strengths.
  auto fill = [&](std::size_t rows, std::size_t lo, std::size_t hi) {
    RealMatrix v(rows, r);
    for (std::size_t i = 0; i < rows; ++i) {
      const auto count = lo + static_cast<std::size_t>(
                                  unit_draw(rng) * static_cast<double>(hi - lo + 1));
      for (std::size_t c = 0; c < std::min(count, r); ++c) {
        const auto topic =
            static_cast<std::size_t>(unit_draw(rng) * static_cast<double>(r));
        v(i, topic) += 0.2 + 0.8 * unit_draw(rng);
      }
    }
    return v;
  };
  TopicVectors tv;
  tv.papers = fill(n, 1, 3);
  tv.reviewers = fill(m, 2, 5);
  return tv;
}

ParseError::ParseError(const std::string& path, std::size_t line,
                       const std::string& what)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
      line_(line) {}

RealMatrix load_topic_rows(const std::string& path, std::size_t width) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<double> values;
  std::size_t rows = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::replace(line.begin(), line.end(), '\t', ' ');
    const auto first = line.find_first_not_of(" \r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::size_t fields = 0;
    const char* cursor = line.c_str();
    while (true) {
      while (*cursor == ' ' || *cursor == '\r') ++cursor;
      if (*cursor == '\0') break;
      char* end = nullptr;
      errno = 0;
      const double v = std::strtod(cursor, &end);
      if (end == cursor || errno == ERANGE ||
          (*end != '\0' && *end != ' ' && *end != '\r')) {
        throw ParseError(path, line_no, "not a number");
      }
      if (!(v >= 0.0)) throw ParseError(path, line_no, "negative value");
      values.push_back(v);
      ++fields;
      cursor = end;
    }
    if (fields != width) {
      throw ParseError(path, line_no,
                       "expected " + std::to_string(width) + " fields, got " +
                           std::to_string(fields));
    }
    ++rows;
  }
  return RealMatrix(rows, width, std::move(values));
}

UiucLoad load_uiuc(const std::string& papers_path,
                   const std::string& reviewers_path) {
  UiucLoad out;
  out.vectors.papers = load_topic_rows(papers_path, kUiucTopics);
  out.vectors.reviewers = load_topic_rows(reviewers_path, kUiucTopics);
  if (out.vectors.papers.rows() == 0) {
    out.warnings.push_back(papers_path + ": no paper rows");
  }
  if (out.vectors.reviewers.rows() == 0) {
    out.warnings.push_back(reviewers_path + ": no reviewer rows");
  }
  return out;
}

}  // namespace revassign
