# Copyright 2026 The revassign Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reviewer assignment: bilevel heuristic, baselines, metrics, generators."""

from revassign._core import (
    DEFAULT_COST_SCALE,
    DegenerateMetric,
    FormatError,
    Instance,
    accordance,
    compute_report,
    fr,
    gen_effort,
    heuristic_solve,
    qp,
    quality_from_topics,
    raer,
    run_sweep,
    solve_bmatching,
    solve_pure_quality,
    solve_t_tuned,
    synthetic_topics,
    theorem3_check,
    theorem4_check,
    verify,
)

__all__ = [
    "DEFAULT_COST_SCALE",
    "DegenerateMetric",
    "FormatError",
    "Instance",
    "accordance",
    "compute_report",
    "fr",
    "gen_effort",
    "heuristic_solve",
    "qp",
    "quality_from_topics",
    "raer",
    "run_sweep",
    "solve_bmatching",
    "solve_pure_quality",
    "solve_t_tuned",
    "synthetic_topics",
    "theorem3_check",
    "theorem4_check",
    "verify",
]
