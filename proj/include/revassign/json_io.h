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

// Text interchange formats. All ids on the wire are 1-based.
//
//   instance:  {"n","m","l","u","U","phi","W_E","W_R"}, matrices row-major
//   matching:  [[paper, reviewer], ...]
//   triplet:   {"X","Y","Z": matching, "bp_objective", "accordance"}
//   partition: {"blocks": [[reviewer, ...], ...]}

#ifndef REVASSIGN_JSON_IO_H_
#define REVASSIGN_JSON_IO_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "revassign/heuristic.h"
#include "revassign/instance.h"
#include "revassign/matrix.h"
#include "revassign/metrics.h"
#include "revassign/svp.h"

namespace revassign {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

std::string instance_to_json(const ProblemInstance& inst);
// Checks field presence and shapes only; see validate_instance for the rest.
ProblemInstance instance_from_json(std::string_view text);
ProblemInstance read_instance(const std::string& path);

std::string matching_to_json(const Matching& x);
Matching matching_from_json(std::string_view text, std::size_t n,
                            std::size_t m);

std::string triplet_to_json(const BpTriplet& t);
BpTriplet triplet_from_json(std::string_view text, std::size_t n,
                            std::size_t m);

std::string partition_to_json(const ReviewerPartition& part);
ReviewerPartition partition_from_json(std::string_view text, std::size_t m);

// Flat object: quality, efforts, n_active, total_effort, avg_effort,
// variance, degenerate.
std::string metrics_to_json(const MetricsReport& r);
// One CSV header line and one data line; efforts are ';' joined.
std::string metrics_to_csv(const MetricsReport& r);

}  // namespace revassign

#endif  // REVASSIGN_JSON_IO_H_
