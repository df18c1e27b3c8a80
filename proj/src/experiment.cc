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
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "revassign/baselines.h"
#include "revassign/heuristic.h"
#include "revassign/instance.h"
#include "revassign/json_io.h"
#include "revassign/metrics.h"

namespace revassign {
namespace {

using nlohmann::json;

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string format_mean(double v, int digits = 6) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

const char* family_name(EffortFamily f) {
  switch (f) {
    case EffortFamily::kAligned:
      return "aligned";
    case EffortFamily::kUniform:
      return "uniform";
    case EffortFamily::kExponential:
      return "exponential";
  }
  return "?";
}

EffortFamily family_from_name(const std::string& name) {
  if (name == "aligned") return EffortFamily::kAligned;
  if (name == "uniform") return EffortFamily::kUniform;
  if (name == "exponential") return EffortFamily::kExponential;
  throw FormatError("unknown effort family \"" + name + "\"");
}

struct Replication {
  bool feasible = false;
  bool degenerate = false;
  double qp = 0.0;
  double raer = 0.0;
  double fr = 0.0;
  double ac = 0.0;
  std::vector<double> t_qp, t_raer, t_fr;
};

// Neumaier summation keeps the means independent of magnitude ordering.
class Accumulator {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double mean(std::size_t count) const {
    return count ? (sum_ + comp_) / static_cast<double>(count)
                 : std::numeric_limits<double>::quiet_NaN();
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

Replication run_replication(const ProblemInstance& inst, const Matching& x_ilp,
                            const std::vector<double>& t_grid,
                            std::int64_t cost_scale) {
  Replication rep;
  const auto bp = heuristic_solve(inst, cost_scale);
  if (!bp) return rep;
  std::vector<Matching> tuned;
  for (double t : t_grid) {
    auto x = solve_t_tuned(inst, TunedConfig(t), cost_scale);
    if (!x) return rep;
    tuned.push_back(std::move(*x));
  }
  rep.feasible = true;
  try {
    const auto& x_bp = bp->assignment;
    rep.qp = qp(x_bp, x_ilp, inst.quality);
    rep.raer = raer(x_bp, x_ilp, inst.effort);
    rep.fr = fr(x_bp, x_ilp, inst.effort);
    rep.ac = bp->accordance;
    for (const auto& x_t : tuned) {
      rep.t_qp.push_back(qp(x_t, x_ilp, inst.quality));
      rep.t_raer.push_back(raer(x_bp, x_t, inst.effort));
      rep.t_fr.push_back(fr(x_bp, x_t, inst.effort));
    }
  } catch (const DegenerateMetric&) {
    rep.degenerate = true;
  }
  return rep;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        fn(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void check_positive_ints(const std::vector<int>& v, const char* what) {
  if (v.empty()) throw std::invalid_argument(std::string(what) + " grid is empty");
  for (int x : v) {
    if (x <= 0) throw std::invalid_argument(std::string(what) + " must be > 0");
  }
}

}  // namespace

std::string FamilySpec::label() const {
  switch (family) {
    case EffortFamily::kAligned:
      return "aligned(sigma=" + format_number(parameter) + ")";
    case EffortFamily::kUniform:
      return "uniform";
    case EffortFamily::kExponential:
      return "exponential(rate=" + format_number(parameter) + ")";
  }
  return "?";
}

int freedom_for(int capacity, double fraction) {
  return static_cast<int>(std::floor(fraction * capacity + 1e-9));
}

void SweepConfig::validate() const {
  if (papers_path.empty() != reviewers_path.empty()) {
    throw std::invalid_argument("papers and reviewers paths go together");
  }
  if (min_reviews < 0 || min_reviews > max_reviews) {
    throw std::invalid_argument("need 0 <= l <= u");
  }
  check_positive_ints(capacities, "U");
  if (freedom_fractions.empty()) throw std::invalid_argument("phi grid is empty");
  for (double f : freedom_fractions) {
    if (!(f >= 0.0)) throw std::invalid_argument("phi fractions must be >= 0");
  }
  if (families.empty()) throw std::invalid_argument("family grid is empty");
  for (const auto& f : families) {
    if (f.family == EffortFamily::kAligned && !(f.parameter >= 0.0)) {
      throw std::invalid_argument("aligned sigma must be >= 0");
    }
    if (f.family == EffortFamily::kExponential && !(f.parameter > 0.0)) {
      throw std::invalid_argument("exponential rate must be > 0");
    }
  }
  for (double t : t_grid) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0, 1]");
  }
  if (replications == 0) throw std::invalid_argument("replications must be >= 1");
  if (cost_scale <= 0) throw std::invalid_argument("cost scale must be > 0");
}

SweepConfig sweep_config_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("sweep config must be a JSON object");
  SweepConfig cfg;
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& key = it.key();
      const auto& v = it.value();
      if (key == "papers") cfg.papers_path = v.get<std::string>();
      else if (key == "reviewers") cfg.reviewers_path = v.get<std::string>();
      else if (key == "synthetic_papers") cfg.synthetic_papers = v.get<std::size_t>();
      else if (key == "synthetic_reviewers") cfg.synthetic_reviewers = v.get<std::size_t>();
      else if (key == "synthetic_topics") cfg.synthetic_topics = v.get<std::size_t>();
      else if (key == "topic_seed") cfg.topic_seed = v.get<std::uint64_t>();
      else if (key == "normalize") cfg.normalize = v.get<bool>();
      else if (key == "l") cfg.min_reviews = v.get<int>();
      else if (key == "u") cfg.max_reviews = v.get<int>();
      else if (key == "U") cfg.capacities = v.get<std::vector<int>>();
      else if (key == "phi_fractions") cfg.freedom_fractions = v.get<std::vector<double>>();
      else if (key == "t") cfg.t_grid = v.get<std::vector<double>>();
      else if (key == "replications") cfg.replications = v.get<std::size_t>();
      else if (key == "seed") cfg.base_seed = v.get<std::uint64_t>();
      else if (key == "threads") cfg.threads = v.get<unsigned>();
      else if (key == "cost_scale") cfg.cost_scale = v.get<std::int64_t>();
      else if (key == "families") {
        cfg.families.clear();
        for (const auto& f : v) {
          FamilySpec spec;
          spec.family = family_from_name(f.at("family").get<std::string>());
          if (spec.family == EffortFamily::kAligned) {
            spec.parameter = f.value("sigma", 0.1);
          } else if (spec.family == EffortFamily::kExponential) {
            spec.parameter = f.value("rate", 0.5);
          } else {
            spec.parameter = 0.0;
          }
          cfg.families.push_back(spec);
        }
      } else {
        throw FormatError("unknown sweep config key \"" + key + "\"");
      }
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad sweep config value: ") + e.what());
  }
  return cfg;
}

std::string sweep_config_to_json(const SweepConfig& cfg) {
  json j;
  if (!cfg.papers_path.empty()) {
    j["papers"] = cfg.papers_path;
    j["reviewers"] = cfg.reviewers_path;
  }
  j["synthetic_papers"] = cfg.synthetic_papers;
  j["synthetic_reviewers"] = cfg.synthetic_reviewers;
  j["synthetic_topics"] = cfg.synthetic_topics;
  j["topic_seed"] = cfg.topic_seed;
  j["normalize"] = cfg.normalize;
  j["l"] = cfg.min_reviews;
  j["u"] = cfg.max_reviews;
  j["U"] = cfg.capacities;
  j["phi_fractions"] = cfg.freedom_fractions;
  json fams = json::array();
  for (const auto& f : cfg.families) {
    json entry{{"family", family_name(f.family)}};
    if (f.family == EffortFamily::kAligned) entry["sigma"] = f.parameter;
    if (f.family == EffortFamily::kExponential) entry["rate"] = f.parameter;
    fams.push_back(std::move(entry));
  }
  j["families"] = std::move(fams);
  j["t"] = cfg.t_grid;
  j["replications"] = cfg.replications;
  j["seed"] = cfg.base_seed;
  j["threads"] = cfg.threads;
  j["cost_scale"] = cfg.cost_scale;
  return j.dump(2) + "\n";
}

RealMatrix sweep_quality(const SweepConfig& cfg,
                         std::vector<std::string>* warnings, bool* synthetic) {
  TopicVectors tv;
  if (cfg.papers_path.empty()) {
    tv = synthetic_topics(cfg.synthetic_papers, cfg.synthetic_reviewers,
                          cfg.synthetic_topics, cfg.topic_seed);
    if (synthetic) *synthetic = true;
  } else {
    auto loaded = load_uiuc(cfg.papers_path, cfg.reviewers_path);
    if (warnings) {
      warnings->insert(warnings->end(), loaded.warnings.begin(),
                       loaded.warnings.end());
    }
    tv = std::move(loaded.vectors);
    if (synthetic) *synthetic = false;
  }
  return quality_from_topics(tv, cfg.normalize);
}

SweepReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  SweepReport report;
  const auto quality =
      sweep_quality(cfg, &report.warnings, &report.synthetic_quality);
  auto swept = run_sweep(cfg, quality);
  swept.synthetic_quality = report.synthetic_quality;
  swept.warnings.insert(swept.warnings.begin(), report.warnings.begin(),
                        report.warnings.end());
  return swept;
}

SweepReport run_sweep(const SweepConfig& cfg, const RealMatrix& quality) {
  cfg.validate();
  SweepReport report;
  const auto n = quality.rows();
  const auto m = quality.cols();

  for (int cap : cfg.capacities) {
    ProblemInstance base;
    base.n = n;
    base.m = m;
    base.min_reviews.assign(n, cfg.min_reviews);
    base.max_reviews.assign(n, cfg.max_reviews);
    base.capacity.assign(m, cap);
    base.freedom.assign(m, 0);
    base.quality = quality;
    base.effort = RealMatrix(n, m, 1.0);
    // X_ILP ignores W_R and phi, so one solve serves the whole U block.
    const auto x_ilp = solve_pure_quality(base, cfg.cost_scale);

    for (const auto& fam : cfg.families) {
      for (double frac : cfg.freedom_fractions) {
        const int phi = freedom_for(cap, frac);
        SweepResultRow head;
        head.framework = fam.label();
        head.capacity = cap;
        head.freedom = phi;

        if (static_cast<std::size_t>(cap + phi) > n) {
          report.warnings.push_back(head.framework + " U=" + std::to_string(cap) +
                                    " phi=" + std::to_string(phi) +
                                    ": U + phi exceeds the number of papers");
        }

        std::vector<Replication> reps(cfg.replications);
        if (x_ilp && static_cast<std::size_t>(cap + phi) <= n) {
          parallel_for(cfg.replications, cfg.threads, [&](std::size_t r) {
            ProblemInstance inst = base;
            inst.freedom.assign(m, phi);
            EffortGenConfig gen;
            gen.family = fam.family;
            if (fam.family == EffortFamily::kAligned) gen.sigma = fam.parameter;
            if (fam.family == EffortFamily::kExponential) gen.rate = fam.parameter;
            gen.seed = cfg.base_seed + r;
            inst.effort = gen_effort(quality, gen);
            reps[r] = run_replication(inst, *x_ilp, cfg.t_grid, cfg.cost_scale);
          });
        }

        Accumulator qp_acc, raer_acc, fr_acc, ac_acc;
        std::vector<Accumulator> tq(cfg.t_grid.size()), tr(cfg.t_grid.size()),
            tf(cfg.t_grid.size());
        std::size_t used = 0;
        for (const auto& rep : reps) {
          if (!rep.feasible) {
            ++head.infeasible;
            continue;
          }
          if (rep.degenerate) {
            ++head.degenerate;
            continue;
          }
          ++used;
          qp_acc.add(rep.qp);
          raer_acc.add(rep.raer);
          fr_acc.add(rep.fr);
          ac_acc.add(rep.ac);
          for (std::size_t k = 0; k < cfg.t_grid.size(); ++k) {
            tq[k].add(rep.t_qp[k]);
            tr[k].add(rep.t_raer[k]);
            tf[k].add(rep.t_fr[k]);
          }
        }
        head.replications = used;
        head.aborted = used == 0;
        if (head.aborted) {
          report.warnings.push_back(head.framework + " U=" + std::to_string(cap) +
                                    " phi=" + std::to_string(phi) +
                                    ": no feasible replication, cell skipped");
        }
        head.qp = qp_acc.mean(used);
        head.raer = raer_acc.mean(used);
        head.fr = fr_acc.mean(used);
        head.ac = ac_acc.mean(used);
        report.rows.push_back(head);
        for (std::size_t k = 0; k < cfg.t_grid.size(); ++k) {
          SweepResultRow row = head;
          row.t = cfg.t_grid[k];
          row.ac.reset();
          row.qp = tq[k].mean(used);
          row.raer = tr[k].mean(used);
          row.fr = tf[k].mean(used);
          report.rows.push_back(row);
        }
      }
    }
  }
  return report;
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "markdown" || name == "md") return TableFormat::kMarkdown;
  throw std::invalid_argument("unknown table format \"" + std::string(name) +
                              "\" (expected csv or markdown)");
}

std::string emit_table(std::span<const SweepResultRow> rows, TableFormat format,
                       bool synthetic_quality) {
  if (rows.empty()) throw std::invalid_argument("no result rows to emit");
  std::ostringstream out;

  if (format == TableFormat::kCsv) {
    out << "framework,U,phi,t,metric,mean,replications,infeasible\n";
    for (const auto& row : rows) {
      const std::string t = row.t ? format_number(*row.t) : "";
      auto line = [&](const char* metric, double v) {
        out << row.framework << ',' << row.capacity << ',' << row.freedom << ','
            << t << ',' << metric << ',' << format_mean(v) << ','
            << row.replications << ',' << row.infeasible << '\n';
      };
      line("QP", row.qp);
      line("RAER", row.raer);
      line("FR", row.fr);
      if (row.ac) line("AC", *row.ac);
    }
    return out.str();
  }

  // Markdown: one table per (U, t) block, framework/phi columns.
  if (synthetic_quality) out << "> synthetic W_E\n\n";
  std::vector<std::pair<int, std::optional<double>>> blocks;
  for (const auto& row : rows) {
    const std::pair<int, std::optional<double>> key{row.capacity, row.t};
    if (std::find(blocks.begin(), blocks.end(), key) == blocks.end()) {
      blocks.push_back(key);
    }
  }
  for (const auto& [cap, t] : blocks) {
    std::vector<const SweepResultRow*> cols;
    for (const auto& row : rows) {
      if (row.capacity == cap && row.t == t) cols.push_back(&row);
    }
    out << "### U=" << cap;
    if (t) out << ", t=" << format_number(*t);
    out << "\n\n| metric |";
    for (auto* c : cols) out << ' ' << c->framework << " phi=" << c->freedom << " |";
    out << "\n|---|";
    for (std::size_t k = 0; k < cols.size(); ++k) out << "---:|";
    out << '\n';
    auto metric_row = [&](const std::string& name, auto getter) {
      out << "| " << name << " |";
      for (auto* c : cols) out << ' ' << format_mean(getter(*c), 4) << " |";
      out << '\n';
    };
    auto count_row = [&](const std::string& name, auto getter) {
      out << "| " << name << " |";
      for (auto* c : cols) out << ' ' << getter(*c) << " |";
      out << '\n';
    };
    const std::string other = t ? "X_ILP^(t)" : "X_ILP";
    metric_row(t ? "QP(X_ILP^(t))" : "QP(X_BP)",
               [](const SweepResultRow& r) { return r.qp; });
    metric_row("RAER(X_BP, " + other + ")",
               [](const SweepResultRow& r) { return r.raer; });
    metric_row("FR(X_BP, " + other + ")",
               [](const SweepResultRow& r) { return r.fr; });
    if (!t) {
      metric_row("AC", [](const SweepResultRow& r) {
        return r.ac.value_or(std::numeric_limits<double>::quiet_NaN());
      });
    }
    count_row("feasible reps",
              [](const SweepResultRow& r) { return r.replications; });
    count_row("infeasible reps",
              [](const SweepResultRow& r) { return r.infeasible; });
    out << '\n';
  }
  return out.str();
}

void write_table(const std::string& path, std::span<const SweepResultRow> rows,
                 TableFormat format, bool synthetic_quality) {
  write_text_file(path, emit_table(rows, format, synthetic_quality));
}

}  // namespace revassign
