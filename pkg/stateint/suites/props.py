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
"""Properties of the dilogarithms and q-Pochhammer symbols"""
import cmath
import math

import mpmath

from stateint.dilogs import (RootOfUnity, cyclic_dilog, cyclic_dilog_log_derivative,
                             li2, pochhammer)
from stateint.suites.default import DefaultSuite, max_error


def _relative(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


class PropertiesSuite(DefaultSuite):
    name = 'props'
    index = 5

    def _disk(self, count, radius):
        return [cmath.rect(radius * math.sqrt(self.rng.uniform()),
                           self.rng.uniform(-math.pi, math.pi)) for _ in range(count)]

    def reflection(self):
        zs = self._disk(100, 0.99)

        def measure():
            return max_error(abs(li2(z) + li2(1 - z) -
                                 (math.pi ** 2 / 6 - cmath.log(z) * cmath.log(1 - z)))
                             for z in zs)
        return measure

    def series_oracle(self):
        zs = self._disk(100, 3.0)

        def measure():
            return max_error(_relative(li2(z), complex(mpmath.polylog(2, z))) for z in zs)
        return measure

    def cyclic_functional(self):
        cases = [(N, x) for N in range(2, 13) for x in self._disk(5, 0.9)]

        def measure():
            errors = []
            for N, x in cases:
                zeta = RootOfUnity(N, 1)
                ratio = cyclic_dilog(N, zeta.value * x, zeta) / cyclic_dilog(N, x, zeta)
                errors.append(abs(ratio ** N * (1 - x ** N) / (1 - x) ** N - 1))
            return max_error(errors)
        return measure

    def log_derivative_identity(self):
        cases = [(M, j, x) for M in range(2, 13) for j in range(1, M)
                 if math.gcd(j, M) == 1 for x in self._disk(10, 0.9)]

        def measure():
            errors = []
            for M, j, x in cases:
                q = RootOfUnity(M, j)
                lhs = sum(x ** m / (1 - q.power(m).value) for m in range(1, M))
                rhs = (M - 1) / 2 * x ** M + \
                    (1 - x ** M) * x * cyclic_dilog_log_derivative(M, x, q)
                errors.append(abs(lhs - rhs))
            return max_error(errors)
        return measure

    def index_addition(self):
        a = cmath.rect(self.rng.uniform(0.3, 0.7), self.rng.uniform(-math.pi, math.pi))
        q = cmath.rect(1.0, self.rng.uniform(0.1, 0.5))

        def measure():
            return max_error(
                _relative(pochhammer(a, q, k + l), pochhammer(a, q, k) * pochhammer(a * q ** k, q, l))
                for k in range(-5, 6) for l in range(-5, 6))
        return measure

    def checks(self):
        yield 'li2 reflection', self.reflection(), 1e-11, True
        yield 'li2 against mpmath', self.series_oracle(), 1e-11, True
        yield 'cyclic dilog functional equation', self.cyclic_functional(), 1e-10, True
        yield 'cyclic dilog log derivative', self.log_derivative_identity(), 1e-9, True
        yield 'pochhammer index addition', self.index_addition(), 1e-11, True
