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

// Python bindings: instances, solvers, metrics and generators over numpy.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "revassign/baselines.h"
#include "revassign/bmatching.h"
#include "revassign/datagen.h"
#include "revassign/experiment.h"
#include "revassign/heuristic.h"
#include "revassign/instance.h"
#include "revassign/json_io.h"
#include "revassign/metrics.h"
#include "revassign/verify.h"

namespace py = pybind11;
using namespace revassign;

namespace {

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ByteArray =
    py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

RealMatrix to_matrix(const RealArray& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-d array");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  return RealMatrix(rows, cols,
                    std::vector<double>(a.data(), a.data() + rows * cols));
}

Matching to_matching(const ByteArray& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-d array");
  Matching x(static_cast<std::size_t>(a.shape(0)),
             static_cast<std::size_t>(a.shape(1)));
  std::copy(a.data(), a.data() + a.size(), x.data().begin());
  if (!x.is_binary()) throw py::value_error("matching entries must be 0 or 1");
  return x;
}

template <typename T>
py::array_t<T> to_array(const Matrix<T>& m) {
  py::array_t<T> out({m.rows(), m.cols()});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

py::object maybe_array(const std::optional<Matching>& x) {
  if (!x) return py::none();
  return to_array<std::uint8_t>(*x);
}

py::dict triplet_dict(const BpTriplet& t) {
  py::dict d;
  d["X"] = to_array<std::uint8_t>(t.assignment);
  d["Y"] = to_array<std::uint8_t>(t.bidding);
  d["Z"] = to_array<std::uint8_t>(t.proposal);
  d["bp_objective"] = t.bp_objective;
  d["accordance"] = t.accordance;
  return d;
}

py::dict report_dict(const MetricsReport& r) {
  py::dict d;
  d["quality"] = r.quality;
  d["efforts"] = r.efforts;
  d["n_active"] = r.n_active;
  d["total_effort"] = r.total_effort;
  d["avg_effort"] = r.avg_effort;
  d["variance"] = r.variance;
  d["degenerate"] = r.degenerate;
  return d;
}

EffortFamily family_from(const std::string& name) {
  if (name == "aligned") return EffortFamily::kAligned;
  if (name == "uniform") return EffortFamily::kUniform;
  if (name == "exponential") return EffortFamily::kExponential;
  throw py::value_error("family must be aligned, uniform or exponential");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reviewer assignment toolkit";
  m.attr("DEFAULT_COST_SCALE") = kDefaultCostScale;

  py::register_exception<DegenerateMetric>(m, "DegenerateMetric",
                                           PyExc_ArithmeticError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<ProblemInstance>(m, "Instance")
      .def(py::init([](const RealArray& quality, const RealArray& effort,
                       std::vector<int> l, std::vector<int> u,
                       std::vector<int> capacity, std::vector<int> freedom) {
             ProblemInstance inst;
             inst.quality = to_matrix(quality);
             inst.effort = to_matrix(effort);
             inst.n = inst.quality.rows();
             inst.m = inst.quality.cols();
             inst.min_reviews = std::move(l);
             inst.max_reviews = std::move(u);
             inst.capacity = std::move(capacity);
             inst.freedom = std::move(freedom);
             return inst;
           }),
           py::arg("quality"), py::arg("effort"), py::arg("l"), py::arg("u"),
           py::arg("U"), py::arg("phi"))
      .def_readonly("n", &ProblemInstance::n)
      .def_readonly("m", &ProblemInstance::m)
      .def_readwrite("l", &ProblemInstance::min_reviews)
      .def_readwrite("u", &ProblemInstance::max_reviews)
      .def_readwrite("U", &ProblemInstance::capacity)
      .def_readwrite("phi", &ProblemInstance::freedom)
      .def_property_readonly(
          "quality", [](const ProblemInstance& i) { return to_array(i.quality); })
      .def_property_readonly(
          "effort", [](const ProblemInstance& i) { return to_array(i.effort); })
      .def("validate",
           [](const ProblemInstance& i) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& v : validate_instance(i)) {
               out.emplace_back(v.code, v.message);
             }
             return out;
           })
      .def("to_json", &instance_to_json)
      .def_static("from_json",
                  [](const std::string& text) { return instance_from_json(text); })
      .def_static("load", &read_instance, py::arg("path"))
      .def("__eq__", [](const ProblemInstance& a, const ProblemInstance& b) {
        return a == b;
      });

  m.def("theorem3_check", &theorem3_check);
  m.def("theorem4_check", &theorem4_check);

  m.def(
      "heuristic_solve",
      [](const ProblemInstance& inst, std::int64_t scale) -> py::object {
        const auto t = heuristic_solve(inst, scale);
        if (!t) return py::none();
        return triplet_dict(*t);
      },
      py::arg("instance"), py::arg("cost_scale") = kDefaultCostScale,
      "Greedy bilevel triplet as a dict with X, Y, Z, bp_objective and "
      "accordance; None when infeasible.");
  m.def(
      "solve_pure_quality",
      [](const ProblemInstance& inst, std::int64_t scale) {
        return maybe_array(solve_pure_quality(inst, scale));
      },
      py::arg("instance"), py::arg("cost_scale") = kDefaultCostScale);
  m.def(
      "solve_t_tuned",
      [](const ProblemInstance& inst, double t, std::int64_t scale) {
        return maybe_array(solve_t_tuned(inst, TunedConfig(t), scale));
      },
      py::arg("instance"), py::arg("t"),
      py::arg("cost_scale") = kDefaultCostScale);
  m.def(
      "solve_bmatching",
      [](const RealArray& weights, const ByteArray& mask, std::vector<int> l,
         std::vector<int> u, std::vector<int> capacity, std::int64_t scale) {
        const EdgeMask em(to_matching(mask));
        return maybe_array(solve_bmatching(
            {to_matrix(weights), scale}, em,
            {std::move(l), std::move(u), std::move(capacity)}));
      },
      py::arg("weights"), py::arg("mask"), py::arg("l"), py::arg("u"),
      py::arg("U"), py::arg("cost_scale") = kDefaultCostScale);

  m.def(
      "compute_report",
      [](const ByteArray& x, const ProblemInstance& inst) {
        return report_dict(compute_report(to_matching(x), inst));
      },
      py::arg("x"), py::arg("instance"));
  m.def(
      "qp",
      [](const ByteArray& x, const ByteArray& x_ilp, const RealArray& q) {
        return qp(to_matching(x), to_matching(x_ilp), to_matrix(q));
      },
      py::arg("x"), py::arg("x_ilp"), py::arg("quality"));
  m.def(
      "raer",
      [](const ByteArray& x, const ByteArray& xp, const RealArray& e) {
        return raer(to_matching(x), to_matching(xp), to_matrix(e));
      },
      py::arg("x"), py::arg("x_prime"), py::arg("effort"));
  m.def(
      "fr",
      [](const ByteArray& x, const ByteArray& xp, const RealArray& e) {
        return fr(to_matching(x), to_matching(xp), to_matrix(e));
      },
      py::arg("x"), py::arg("x_prime"), py::arg("effort"));
  m.def(
      "accordance",
      [](const ByteArray& x, const ByteArray& y) {
        return accordance(to_matching(x), to_matching(y));
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "synthetic_topics",
      [](std::size_t n, std::size_t mm, std::size_t r, std::uint64_t seed) {
        const auto tv = synthetic_topics(n, mm, r, seed);
        return py::make_tuple(to_array(tv.papers), to_array(tv.reviewers));
      },
      py::arg("n"), py::arg("m"), py::arg("topics") = kUiucTopics,
      py::arg("seed") = 1);
  m.def(
      "quality_from_topics",
      [](const RealArray& papers, const RealArray& reviewers, bool normalize) {
        return to_array(quality_from_topics(
            {to_matrix(papers), to_matrix(reviewers)}, normalize));
      },
      py::arg("papers"), py::arg("reviewers"), py::arg("normalize") = true);
  m.def(
      "gen_effort",
      [](const RealArray& quality, const std::string& family, double sigma,
         double rate, std::uint64_t seed) {
        EffortGenConfig cfg;
        cfg.family = family_from(family);
        cfg.sigma = sigma;
        cfg.rate = rate;
        cfg.seed = seed;
        return to_array(gen_effort(to_matrix(quality), cfg));
      },
      py::arg("quality"), py::arg("family") = "aligned",
      py::arg("sigma") = 0.1, py::arg("rate") = 0.5, py::arg("seed") = 0);

  m.def(
      "run_sweep",
      [](const std::string& config_json) {
        const auto cfg = sweep_config_from_json(config_json);
        SweepReport report;
        {
          py::gil_scoped_release release;
          report = run_sweep(cfg);
        }
        py::list rows;
        for (const auto& r : report.rows) {
          py::dict d;
          d["framework"] = r.framework;
          d["U"] = r.capacity;
          d["phi"] = r.freedom;
          d["t"] = r.t ? py::object(py::float_(*r.t)) : py::none();
          d["QP"] = r.qp;
          d["RAER"] = r.raer;
          d["FR"] = r.fr;
          d["AC"] = r.ac ? py::object(py::float_(*r.ac)) : py::none();
          d["replications"] = r.replications;
          d["infeasible"] = r.infeasible;
          d["degenerate"] = r.degenerate;
          d["aborted"] = r.aborted;
          rows.append(std::move(d));
        }
        return rows;
      },
      py::arg("config_json") = "{}",
      "Runs a sweep described by a JSON config and returns one dict per row.");

  m.def(
      "verify",
      [](std::size_t reps, std::uint64_t seed) {
        const auto results = run_all_checks(reps, seed);
        std::vector<py::tuple> out;
        for (const auto& r : results) {
          out.push_back(py::make_tuple(r.name, r.passed(), r.detail));
        }
        return out;
      },
      py::arg("reps") = 50, py::arg("seed") = 0,
      "Oracle-backed checks as (name, passed, detail) tuples.");
}
