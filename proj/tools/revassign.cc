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

// revassign: solve, sweep, verify and gen subcommands.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "revassign/baselines.h"
#include "revassign/datagen.h"
#include "revassign/experiment.h"
#include "revassign/heuristic.h"
#include "revassign/instance.h"
#include "revassign/json_io.h"
#include "revassign/metrics.h"
#include "revassign/verify.h"

namespace {

using nlohmann::json;
using namespace revassign;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

json edges(const Matching& x) { return json::parse(matching_to_json(x)); }

std::optional<double> guarded(double (*fn)(const Matching&, const Matching&,
                                           const RealMatrix&),
                              const Matching& a, const Matching& b,
                              const RealMatrix& w) {
  try {
    return fn(a, b, w);
  } catch (const DegenerateMetric&) {
    return std::nullopt;
  }
}

json maybe(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

int run_solve(const std::string& path, const std::vector<double>& t_grid,
              std::int64_t scale, const std::string& out) {
  const auto inst = read_instance(path);
  const auto violations = validate_instance(inst);
  if (!violations.empty()) {
    for (const auto& v : violations) {
      std::cerr << path << ": " << v.code << ": " << v.message << "\n";
    }
    return 2;
  }
  json report;
  const auto bp = heuristic_solve(inst, scale);
  const auto ilp = solve_pure_quality(inst, scale);
  report["heuristic"] = bp ? json::parse(triplet_to_json(*bp)) : json(nullptr);
  report["pure_quality"] = ilp ? edges(*ilp) : json(nullptr);
  json metrics;
  if (bp) metrics["heuristic"] = json::parse(metrics_to_json(compute_report(bp->assignment, inst)));
  if (ilp) metrics["pure_quality"] = json::parse(metrics_to_json(compute_report(*ilp, inst)));
  json tuned = json::array();
  for (double t : t_grid) {
    const auto x = solve_t_tuned(inst, TunedConfig(t), scale);
    json entry{{"t", t}, {"X", x ? edges(*x) : json(nullptr)}};
    if (x) {
      entry["metrics"] = json::parse(metrics_to_json(compute_report(*x, inst)));
      if (ilp) entry["QP"] = maybe(guarded(qp, *x, *ilp, inst.quality));
      if (bp) {
        entry["RAER_vs_heuristic"] = maybe(guarded(raer, bp->assignment, *x, inst.effort));
        entry["FR_vs_heuristic"] = maybe(guarded(fr, bp->assignment, *x, inst.effort));
      }
    }
    tuned.push_back(std::move(entry));
  }
  report["tuned"] = std::move(tuned);
  report["metrics"] = std::move(metrics);
  if (bp && ilp) {
    report["comparison"] = {
        {"QP", maybe(guarded(qp, bp->assignment, *ilp, inst.quality))},
        {"RAER", maybe(guarded(raer, bp->assignment, *ilp, inst.effort))},
        {"FR", maybe(guarded(fr, bp->assignment, *ilp, inst.effort))},
        {"AC", bp->accordance},
    };
  }
  emit(out, report.dump(2) + "\n");
  if (!bp) std::cerr << "heuristic: infeasible\n";
  return bp ? 0 : 3;
}

int run_verify(std::size_t reps, std::uint64_t seed) {
  const auto results = run_all_checks(reps, seed);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.detail
              << ")\n";
    failed += r.passed() ? 0 : 1;
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reviewer assignment toolkit"};
  app.require_subcommand(1);

  std::string out;
  std::uint64_t seed = 0;

  auto* solve = app.add_subcommand("solve", "Solve one instance file");
  std::string instance_path;
  std::vector<double> solve_t{0.05, 0.1, 0.15};
  std::int64_t scale = kDefaultCostScale;
  solve->add_option("instance", instance_path, "Instance JSON")->required();
  solve->add_option("--t", solve_t, "t values for the tuned baseline");
  solve->add_option("--scale", scale, "Fixed-point cost scale");
  solve->add_option("--out", out, "Output path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Run a replication sweep");
  std::string config_path, format = "csv", papers, reviewers;
  std::optional<std::size_t> reps;
  std::optional<std::uint64_t> sweep_seed;
  std::optional<unsigned> threads;
  std::vector<int> caps;
  sweep->add_option("config", config_path, "SweepConfig JSON");
  sweep->add_option("--seed", sweep_seed, "Base seed");
  sweep->add_option("--reps", reps, "Replications per cell");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");
  sweep->add_option("--U", caps, "Capacity grid");
  sweep->add_option("--papers", papers, "Paper topic-vector file");
  sweep->add_option("--reviewers", reviewers, "Reviewer topic-vector file");
  sweep->add_option("--format", format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown", "md"}));
  sweep->add_option("--out", out, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run oracle-backed checks");
  std::size_t verify_reps = 100;
  verify->add_option("--seed", seed, "Seed");
  verify->add_option("--reps", verify_reps, "Cases per check");

  auto* gen = app.add_subcommand("gen", "Emit a synthetic instance");
  std::size_t gen_n = 73, gen_m = 189, gen_r = kUiucTopics;
  int gen_l = 3, gen_u = 5, gen_cap = 8, gen_phi = 4;
  std::string family = "aligned";
  double sigma = 0.1, rate = 0.5;
  std::uint64_t topic_seed = 1;
  bool raw = false;
  gen->add_option("--n", gen_n, "Papers (synthetic topics)");
  gen->add_option("--m", gen_m, "Reviewers (synthetic topics)");
  gen->add_option("--topics", gen_r, "Topic dimension (synthetic topics)");
  gen->add_option("--topic-seed", topic_seed, "Seed of the synthetic topics");
  gen->add_option("--papers", papers, "Paper topic-vector file");
  gen->add_option("--reviewers", reviewers, "Reviewer topic-vector file");
  gen->add_option("--l", gen_l, "Minimum reviews per paper");
  gen->add_option("--u", gen_u, "Maximum reviews per paper");
  gen->add_option("--U", gen_cap, "Reviewer capacity");
  gen->add_option("--phi", gen_phi, "Reviewer freedom");
  gen->add_option("--family", family, "aligned, uniform or exponential")
      ->check(CLI::IsMember({"aligned", "uniform", "exponential"}));
  gen->add_option("--sigma", sigma, "Aligned noise standard deviation");
  gen->add_option("--rate", rate, "Exponential rate");
  gen->add_flag("--raw", raw, "Do not normalize W_E to max 1");
  gen->add_option("--seed", seed, "Effort seed");
  gen->add_option("--out", out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(instance_path, solve_t, scale, out);

    if (*sweep) {
      SweepConfig cfg;
      if (!config_path.empty()) {
        cfg = sweep_config_from_json(read_text_file(config_path));
      }
      if (sweep_seed) cfg.base_seed = *sweep_seed;
      if (reps) cfg.replications = *reps;
      if (threads) cfg.threads = *threads;
      if (!caps.empty()) cfg.capacities = caps;
      if (!papers.empty()) cfg.papers_path = papers;
      if (!reviewers.empty()) cfg.reviewers_path = reviewers;
      const auto report = run_sweep(cfg);
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
      if (report.synthetic_quality) std::cerr << "note: synthetic W_E\n";
      const auto text = emit_table(report.rows, parse_table_format(format),
                                   report.synthetic_quality);
      emit(out, text);
      return 0;
    }

    if (*verify) return run_verify(verify_reps, seed);

    if (*gen) {
      TopicVectors tv;
      if (!papers.empty() || !reviewers.empty()) {
        auto loaded = load_uiuc(papers, reviewers);
        for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
        tv = std::move(loaded.vectors);
      } else {
        tv = synthetic_topics(gen_n, gen_m, gen_r, topic_seed);
      }
      ProblemInstance inst;
      inst.quality = quality_from_topics(tv, !raw);
      inst.n = inst.quality.rows();
      inst.m = inst.quality.cols();
      inst.min_reviews.assign(inst.n, gen_l);
      inst.max_reviews.assign(inst.n, gen_u);
      inst.capacity.assign(inst.m, gen_cap);
      inst.freedom.assign(inst.m, gen_phi);
      EffortGenConfig ecfg;
      ecfg.family = family == "aligned"   ? EffortFamily::kAligned
                    : family == "uniform" ? EffortFamily::kUniform
                                          : EffortFamily::kExponential;
      ecfg.sigma = sigma;
      ecfg.rate = rate;
      ecfg.seed = seed;
      inst.effort = gen_effort(inst.quality, ecfg);
      for (const auto& v : validate_instance(inst)) {
        std::cerr << "warning: " << v.code << ": " << v.message << "\n";
      }
      emit(out, instance_to_json(inst));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
