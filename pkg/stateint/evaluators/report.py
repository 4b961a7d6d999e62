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
"""Result containers shared by the evaluators and the quadrature"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from stateint.dilogs import BranchedLog
from stateint.exceptions import NonFinite


class Method(Enum):
    CLOSED_FORM = 'closed_form'
    RESIDUE_SUM = 'residue_sum'
    QUADRATURE = 'quadrature'


@dataclass(frozen=True)
class StripPoint:
    """A lift w of a gluing root z = exp(2 pi s w) with its branch data"""
    w: complex
    z: complex
    theta_plus: complex
    theta_minus: complex
    log_z: BranchedLog
    sheet: int = 0

    @property
    def log_z_im_over_pi(self):
        return self.log_z.value.imag / math.pi


@dataclass
class EvaluationReport:
    """Value of a state-integral together with how it was obtained"""
    value: complex
    method: Method
    strip_points: List[StripPoint] = field(default_factory=list)
    lam: Optional[float] = None
    params: dict = field(default_factory=dict)
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        if not (math.isfinite(self.value.real) and math.isfinite(self.value.imag)):
            raise NonFinite("{} produced {}".format(self.method.value, self.value))
