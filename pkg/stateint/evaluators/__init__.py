# Copyright 2026 StateInt
#
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
"""Closed-form and residue evaluation at b^2 = M/N"""
from stateint.evaluators.report import EvaluationReport, Method, StripPoint
from stateint.evaluators.gluing import (gluing_roots, resolve_strip_set,
                                        scan_lifts, strip_set)
from stateint.evaluators.closed_form import (evaluate_cor_m1, evaluate_thm1,
                                             field_descent_ratios)
from stateint.evaluators.residue import evaluate_residue_sum
from stateint.evaluators.pretzel import pretzel_torsion, split_pretzel_roots
