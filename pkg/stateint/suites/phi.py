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
"""Functional equations of Phi_b"""
import cmath
import math

import numpy as np

from stateint.faddeev import log_phi_integral, log_phi_zero, phi, phi_zero
from stateint.suites.default import DefaultSuite

B_VALUES = (1.0, math.sqrt(1 / 2), math.sqrt(2 / 3), math.sqrt(3 / 5))
POINTS = 50


class PhiSuite(DefaultSuite):
    name = 'phi'
    index = 0

    def _strip_points(self, height):
        return self.random_complex(POINTS, re=(-1.0, 1.0), im=(-height, height))

    def inversion(self, b):
        xs = self._strip_points(0.9 * 0.5 * (b + 1 / b))

        def measure():
            lhs = log_phi_integral(b, xs) + log_phi_integral(b, -xs)
            rhs = 1j * math.pi * xs * xs + 2 * log_phi_zero(b)
            return np.max(np.abs(np.exp(lhs - rhs) - 1))
        return measure

    def shift(self, b, period):
        # both x - i p/2 and x + i p/2 stay inside the strip
        height = 0.9 * (0.95 * 0.5 * (b + 1 / b) - period / 2)
        xs = self._strip_points(height)

        def measure():
            ratio = np.exp(log_phi_integral(b, xs - 0.5j * period) -
                           log_phi_integral(b, xs + 0.5j * period))
            return np.max(np.abs(ratio / (1 + np.exp(2 * math.pi * period * xs)) - 1))
        return measure

    def asymptotics(self, b):
        def measure():
            left = abs(phi(b, -5.0) - 1)
            x = 5.0 + 0.01j
            gaussian = cmath.exp(1j * math.pi * x * x)
            right = abs(phi(b, x) - phi_zero(b) ** 2 * gaussian) / abs(gaussian)
            return max(left, right)
        return measure

    def checks(self):
        for b in B_VALUES:
            label = 'b={:.6g}'.format(b)
            yield 'inversion ' + label, self.inversion(b), 1e-10, True
            yield 'shift ib ' + label, self.shift(b, b), 1e-9, True
            yield 'shift i/b ' + label, self.shift(b, 1 / b), 1e-9, True
            yield 'asymptotics ' + label, self.asymptotics(b), 1e-6, True
