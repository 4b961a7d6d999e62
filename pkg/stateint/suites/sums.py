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
"""Multiplier identities and the (P, Q) independence of G_{M,N}"""
import cmath
import math

from stateint.dilogs import RootOfUnity
from stateint.faddeev import AdmissiblePair, phi
from stateint.sums import ABSpec, PretzelSpec, big_g_mn, g_k, g_ladder
from stateint.suites.default import DefaultSuite, max_error

SPECS = (ABSpec(1, 2), ABSpec(2, 3), PretzelSpec())
ORDERS = (2, 3, 5)
KS = range(-3, 4)


def _relative(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


class SumsSuite(DefaultSuite):
    name = 'sums'
    index = 1

    def _point(self):
        # away from the poles of the multipliers on |z| = 1
        return cmath.rect(self.rng.uniform(0.3, 0.6), self.rng.uniform(-math.pi, math.pi))

    def quasi_periodicity(self, spec, N):
        z, q = self._point(), RootOfUnity(N, 1)

        def measure():
            ladder = g_ladder(spec, z, q, -3, 3 + N)
            return max_error(_relative(ladder[k + N], ladder[k] * ladder[N]) for k in KS)
        return measure

    def invariance(self, spec, N):
        z, q = self._point(), RootOfUnity(N, 1)

        def measure():
            return _relative(g_k(spec, '+', N, z * q.value, q), g_k(spec, '+', N, z, q))
        return measure

    def closed_form(self, spec, N):
        z, q = self._point(), RootOfUnity(N, 1)

        def measure():
            return max_error(_relative(g_k(spec, '+', k, z, q), spec.g_closed(k, z, q))
                             for k in KS)
        return measure

    def total_multiplier(self, spec, pair):
        w = complex(self.rng.uniform(-0.1, 0.1), self.rng.uniform(0.05, 0.3)) / pair.s

        def measure():
            z = cmath.exp(2 * math.pi * pair.s * w)
            target = spec.g(z)
            plus = g_k(spec, '+', pair.N, cmath.exp(2 * math.pi * pair.b * w), pair.q_plus)
            minus = g_k(spec, '-', pair.M, cmath.exp(2 * math.pi * w / pair.b), pair.q_minus)
            return max(_relative(plus, target), _relative(minus, target))
        return measure

    def bezout_independence(self, pair):
        t = cmath.rect(1.3, self.rng.uniform(-math.pi, math.pi))
        spec = ABSpec(1, 2)

        def measure():
            x_plus, x_minus = t ** pair.M, t ** pair.N
            values = [big_g_mn(spec, pair.with_bezout(shift), x_plus, x_minus)
                      for shift in range(-2, 3)]
            return max_error(_relative(v, values[2]) for v in values)
        return measure

    def quasi_periodic_integrand(self, pair, m, n):
        spec = ABSpec(1, 2)
        u = complex(self.rng.uniform(-0.5, 0.5), -pair.c_b.imag * self.rng.uniform(0.6, 0.9))

        def f(x):
            y = x + pair.c_b
            return phi(pair, y) ** spec.B * cmath.exp(-spec.A * math.pi * 1j * y * y)

        def measure():
            shifted = u + 1j * (m * pair.b + n / pair.b)
            expected = g_k(spec, '+', m, cmath.exp(2 * math.pi * pair.b * u), pair.q_plus) * \
                g_k(spec, '-', n, cmath.exp(2 * math.pi * u / pair.b), pair.q_minus)
            return _relative(f(shifted) / f(u), expected)
        return measure

    def checks(self):
        for spec in SPECS:
            for N in ORDERS:
                label = '{} N={}'.format(spec, N)
                yield 'quasi-periodicity ' + label, self.quasi_periodicity(spec, N), 1e-10, True
                yield 'invariance ' + label, self.invariance(spec, N), 1e-10, True
                yield 'closed form ' + label, self.closed_form(spec, N), 1e-10, True
            for M, N in ((1, 2), (2, 3), (3, 5)):
                yield 'total multiplier {} ({},{})'.format(spec, M, N), \
                    self.total_multiplier(spec, AdmissiblePair(M, N)), 1e-10, True
        for M, N in ((2, 3), (3, 5), (4, 7)):
            yield 'bezout independence ({},{})'.format(M, N), \
                self.bezout_independence(AdmissiblePair(M, N)), 1e-11, True
        pair = AdmissiblePair(2, 3)
        for m in range(3):
            for n in range(3):
                yield 'integrand shift m={} n={}'.format(m, n), \
                    self.quasi_periodic_integrand(pair, m, n), 1e-8, True
