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
"""Closed forms of Phi_b at rational b^2 against the integral representation"""
import cmath
import math

from stateint.faddeev import (AdmissiblePair, phi, phi_m1, phi_rational,
                              phi_rational_shifted, phi_unit)
from stateint.suites.default import DefaultSuite, max_error

PAIRS = ((1, 1), (1, 2), (1, 3), (2, 3), (3, 5))
GRID_RE = (-0.9, -0.45, 0.05, 0.5, 0.95)
GRID_IM = (-0.85, -0.4, 0.15, 0.6, 0.95)


def grid():
    return [complex(re, im) for re in GRID_RE for im in GRID_IM]


def _relative(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


class RationalSuite(DefaultSuite):
    name = 'thm2'
    index = 3

    @staticmethod
    def rational(pair):
        def measure():
            return max_error(
                _relative(phi_rational(pair, z), phi(pair, z / (2 * math.pi * pair.s) - pair.c_b))
                for z in grid())
        return measure

    @staticmethod
    def shifted(pair):
        def measure():
            return max_error(
                _relative(phi_rational_shifted(pair, z),
                          phi(pair, z / (2 * math.pi * pair.s) + pair.c_b))
                for z in grid())
        return measure

    def quotient(self, pair):
        zs = self.random_complex(10)

        def measure():
            return max_error(
                _relative(phi_rational(pair, z) / phi_rational_shifted(pair, z),
                          (1 - cmath.exp(z / pair.N)) * (1 - cmath.exp(z / pair.M)))
                for z in zs)
        return measure

    def unit(self):
        xs = self.random_complex(10, im=(-0.45, 0.45))
        pair = AdmissiblePair(1, 1)

        def measure():
            return max_error(max(_relative(phi_unit(x), phi(1.0, x)),
                                 _relative(phi_unit(x),
                                           phi_rational(pair, 2 * math.pi * (x + 1j))))
                             for x in xs)
        return measure

    def m1(self, N):
        xs = self.random_complex(10, im=(0.05, 0.4))
        pair = AdmissiblePair(1, N)

        def measure():
            return max_error(_relative(phi_m1(N, x), phi_rational(pair, 2 * math.pi * pair.s * x))
                             for x in xs)
        return measure

    def checks(self):
        for M, N in PAIRS:
            pair = AdmissiblePair(M, N)
            label = '({},{})'.format(M, N)
            yield 'rational ' + label, self.rational(pair), 1e-8, True
            yield 'rational shifted ' + label, self.shifted(pair), 1e-8, True
        yield 'quotient (2,3)', self.quotient(AdmissiblePair(2, 3)), 1e-10, True
        yield 'b=1 closed form', self.unit(), 1e-9, True
        for N in (2, 3):
            yield 'M=1 closed form N={}'.format(N), self.m1(N), 1e-10, True
