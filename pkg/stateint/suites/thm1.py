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
"""Closed form, residue sum and quadrature of the AB state-integral"""
import cmath
import math

from stateint.dilogs import li2
from stateint.evaluators import (evaluate_cor_m1, evaluate_residue_sum,
                                 evaluate_thm1, field_descent_ratios, strip_set)
from stateint.evaluators.closed_form import thm1_prefactor, thm1_term
from stateint.faddeev import AdmissiblePair
from stateint.quadrature.state_integral import state_integral_numeric
from stateint.sums import ABSpec
from stateint.suites.default import DefaultSuite, max_error

AB_GRID = ((1, 2), (1, 3), (2, 3))
PAIR_GRID = ((1, 1), (1, 2), (2, 1), (1, 3), (2, 3))


def e(x):
    return cmath.exp(2j * math.pi * x)


def volume():
    """Hyperbolic volume of the figure-eight knot complement, 2 Im Li2(e^{pi i/3})"""
    return 2 * li2(e(1 / 6)).imag


def figure_eight_value():
    """Exact value of the (1, 2) integral at b = 1"""
    return e(1 / 12) / math.sqrt(3) * 2 * math.sinh(volume() / (2 * math.pi))


def ledger_errors():
    """Deviations of the b = 1, (A, B) = (1, 2) evaluation from its worked values"""
    spec, pair = ABSpec(1, 2), AdmissiblePair(1, 1)
    points = sorted(strip_set(spec, pair, -0.01), key=lambda p: p.w.imag)
    c = volume() / (2 * math.pi)
    terms = [thm1_term(spec, pair, p) for p in points]
    expected_w = (1j / 6, 5j / 6)
    expected_log = (2j * math.pi / 6, 10j * math.pi / 6)
    expected_rogers = (math.exp(-c) * e(-1 / 24), -math.exp(c) * e(-1 / 24) * e(1 / 3))
    expected_geometric = (e(-1 / 3) / math.sqrt(3), e(1 / 3) / math.sqrt(3))
    errors = [abs(thm1_prefactor(spec, pair) - e(-1 / 24))]
    for point, term, w, log, rog, geo in zip(points, terms, expected_w, expected_log,
                                             expected_rogers, expected_geometric):
        errors += [abs(point.w - w), abs(point.log_z.value - log),
                   abs(term['rogers_exp'] - rog), abs(term['geometric'] - geo),
                   abs(term['phase'] - 1)]
    return max(errors)


def lambdas(spec, pair, rng, count=5):
    low, high = spec.lambda_range(pair)
    width = high - low
    return [low + width * (j + 0.5 + 0.4 * (rng.uniform() - 0.5)) / count
            for j in range(count)]


class ClosedFormSuite(DefaultSuite):
    name = 'thm1'
    index = 2

    def agreement(self, spec, pair, quadrature):
        def measure():
            closed = evaluate_thm1(spec, pair).value
            other = state_integral_numeric(spec, pair).value if quadrature \
                else evaluate_residue_sum(spec, pair).value
            return abs(closed - other)
        return measure

    def lambda_invariance(self, spec, pair):
        values = lambdas(spec, pair, self.rng)

        def measure():
            results = [evaluate_thm1(spec, pair, lam).value for lam in values]
            results += [evaluate_residue_sum(spec, pair, lam).value for lam in values]
            return max_error(abs(r - results[0]) for r in results)
        return measure

    @staticmethod
    def bezout_invariance(spec, pair):
        def measure():
            base = evaluate_thm1(spec, pair).value
            return max_error(abs(evaluate_thm1(spec, pair.with_bezout(r)).value - base)
                             for r in range(-2, 3))
        return measure

    @staticmethod
    def specialization(spec, N):
        def measure():
            return abs(evaluate_cor_m1(spec, N).value -
                       evaluate_thm1(spec, AdmissiblePair(1, N)).value)
        return measure

    @staticmethod
    def field_descent(spec, pair):
        def measure():
            return max_error(abs(r - 1) for r in field_descent_ratios(spec, pair))
        return measure

    def checks(self):
        spec = ABSpec(1, 2)
        yield 'figure-eight value', \
            lambda: abs(evaluate_thm1(spec, AdmissiblePair(1, 1)).value - figure_eight_value()), \
            1e-10, True
        yield 'worked b=1 ledger', ledger_errors, 1e-12, True
        for A, B in AB_GRID:
            spec = ABSpec(A, B)
            for M, N in PAIR_GRID:
                pair = AdmissiblePair(M, N)
                label = '{} ({},{})'.format(spec, M, N)
                yield 'residue ' + label, self.agreement(spec, pair, False), 1e-9, True
                yield 'quadrature ' + label, self.agreement(spec, pair, True), 1e-7, True
                yield 'lambda invariance ' + label, self.lambda_invariance(spec, pair), 1e-9, True
            for N in (1, 2, 3):
                yield 'M=1 specialization {} N={}'.format(spec, N), \
                    self.specialization(spec, N), 1e-11, True
        for M, N in ((2, 3), (3, 5)):
            yield 'bezout invariance ({},{})'.format(M, N), \
                self.bezout_invariance(ABSpec(1, 2), AdmissiblePair(M, N)), 1e-11, True
        for M, N in ((1, 2), (2, 3)):
            yield 'field descent ({},{})'.format(M, N), \
                self.field_descent(ABSpec(1, 2), AdmissiblePair(M, N)), 1e-8, False
