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

#include "revassign/json_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace revassign {
namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw FormatError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

template <typename T>
std::vector<T> vector_field(const json& obj, const char* key,
                            std::size_t expected) {
  const auto& v = field(obj, key);
  if (!v.is_array()) {
    throw FormatError(std::string("field \"") + key + "\" must be an array");
  }
  if (v.size() != expected) {
    throw FormatError(std::string("field \"") + key + "\" has " +
                      std::to_string(v.size()) + " entries, expected " +
                      std::to_string(expected));
  }
  try {
    return v.get<std::vector<T>>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field \"") + key +
                      "\" has entries of the wrong type");
  }
}

std::size_t size_field(const json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_number_integer() || v.get<long>() < 0) {
    throw FormatError(std::string("field \"") + key +
                      "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

json edges_json(const Matching& x) {
  json out = json::array();
  for (const auto& e : x.edges()) {
    out.push_back({e.paper + 1, e.reviewer + 1});
  }
  return out;
}

Matching edges_from(const json& arr, std::size_t n, std::size_t m) {
  if (!arr.is_array()) throw FormatError("matching must be an array of pairs");
  std::vector<Edge> edges;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw FormatError("matching entries must be [paper, reviewer] pairs");
    }
    const long p = pair[0].get<long>();
    const long r = pair[1].get<long>();
    if (p < 1 || r < 1 || static_cast<std::size_t>(p) > n ||
        static_cast<std::size_t>(r) > m) {
      throw FormatError("edge [" + std::to_string(p) + ", " +
                        std::to_string(r) + "] outside the instance");
    }
    edges.push_back({static_cast<std::size_t>(p - 1),
                     static_cast<std::size_t>(r - 1)});
  }
  return Matching::from_edges(n, m, edges);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read error on " + path);
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write error on " + path);
}

std::string instance_to_json(const ProblemInstance& inst) {
  json j;
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["l"] = inst.min_reviews;
  j["u"] = inst.max_reviews;
  j["U"] = inst.capacity;
  j["phi"] = inst.freedom;
  j["W_E"] = std::vector<double>(inst.quality.data().begin(),
                                 inst.quality.data().end());
  j["W_R"] = std::vector<double>(inst.effort.data().begin(),
                                 inst.effort.data().end());
  return j.dump(2) + "\n";
}

ProblemInstance instance_from_json(std::string_view text) {
  const json j = parse(text);
  ProblemInstance inst;
  inst.n = size_field(j, "n");
  inst.m = size_field(j, "m");
  inst.min_reviews = vector_field<int>(j, "l", inst.n);
  inst.max_reviews = vector_field<int>(j, "u", inst.n);
  inst.capacity = vector_field<int>(j, "U", inst.m);
  inst.freedom = vector_field<int>(j, "phi", inst.m);
  inst.quality = RealMatrix(inst.n, inst.m,
                            vector_field<double>(j, "W_E", inst.n * inst.m));
  inst.effort = RealMatrix(inst.n, inst.m,
                           vector_field<double>(j, "W_R", inst.n * inst.m));
  return inst;
}

ProblemInstance read_instance(const std::string& path) {
  try {
    return instance_from_json(read_text_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string matching_to_json(const Matching& x) {
  return edges_json(x).dump() + "\n";
}

Matching matching_from_json(std::string_view text, std::size_t n,
                            std::size_t m) {
  return edges_from(parse(text), n, m);
}

std::string triplet_to_json(const BpTriplet& t) {
  json j;
  j["X"] = edges_json(t.assignment);
  j["Y"] = edges_json(t.bidding);
  j["Z"] = edges_json(t.proposal);
  j["bp_objective"] = t.bp_objective;
  j["accordance"] = t.accordance;
  return j.dump(2) + "\n";
}

BpTriplet triplet_from_json(std::string_view text, std::size_t n,
                            std::size_t m) {
  const json j = parse(text);
  BpTriplet t;
  t.assignment = edges_from(field(j, "X"), n, m);
  t.bidding = edges_from(field(j, "Y"), n, m);
  t.proposal = edges_from(field(j, "Z"), n, m);
  const auto& obj = field(j, "bp_objective");
  const auto& ac = field(j, "accordance");
  if (!obj.is_number() || !ac.is_number()) {
    throw FormatError("bp_objective and accordance must be numbers");
  }
  t.bp_objective = obj.get<double>();
  t.accordance = ac.get<double>();
  return t;
}

std::string partition_to_json(const ReviewerPartition& part) {
  json blocks = json::array();
  for (const auto& block : part.blocks()) {
    json b = json::array();
    for (auto r : block) b.push_back(r + 1);
    blocks.push_back(std::move(b));
  }
  json j;
  j["blocks"] = std::move(blocks);
  return j.dump() + "\n";
}

ReviewerPartition partition_from_json(std::string_view text, std::size_t m) {
  const json j = parse(text);
  const auto& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw FormatError("\"blocks\" must be an array");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : blocks) {
    if (!b.is_array()) throw FormatError("each block must be an array");
    std::vector<std::size_t> ids;
    for (const auto& r : b) {
      if (!r.is_number_integer() || r.get<long>() < 1) {
        throw FormatError("reviewer ids must be positive integers");
      }
      ids.push_back(r.get<std::size_t>() - 1);
    }
    out.push_back(std::move(ids));
  }
  try {
    return ReviewerPartition(std::move(out), m);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string metrics_to_json(const MetricsReport& r) {
  json j;
  j["quality"] = r.quality;
  j["efforts"] = r.efforts;
  j["n_active"] = r.n_active;
  j["total_effort"] = r.total_effort;
  j["avg_effort"] = r.avg_effort;
  j["variance"] = r.variance;
  j["degenerate"] = r.degenerate;
  return j.dump(2) + "\n";
}

std::string metrics_to_csv(const MetricsReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "quality,n_active,total_effort,avg_effort,variance,degenerate,efforts\n";
  out << r.quality << ',' << r.n_active << ',' << r.total_effort << ','
      << r.avg_effort << ',' << r.variance << ','
      << (r.degenerate ? "true" : "false") << ',';
  for (std::size_t j = 0; j < r.efforts.size(); ++j) {
    if (j) out << ';';
    out << r.efforts[j];
  }
  out << '\n';
  return out.str();
}

}  // namespace revassign
