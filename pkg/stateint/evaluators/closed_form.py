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
"""Closed-form evaluation of the AB state-integral at b^2 = M/N.

Each strip point contributes
    exp(i B R(z) / (2 pi s^2)) (1 - z)^(alpha B) G_{M,N}(theta+, theta-)
    / (z g'(z) slashed D_N(theta+)^B slashed D_M(theta-)^B)
with alpha = (2N + 1)(2M + 1) / (4MN), times the gluing phase
exp(2 pi i m (1 + 2(M + N) - 2 s i w) / (4MN)). Here 2 pi i m is
A (log z - pi i) - B Log(1 - z), the winding of g along the lift, and
m = 0 recovers the bare formula. Every branch follows from w, and
points on the real cut use the limit from above.
"""
import cmath
import math

from stateint.dilogs import RootOfUnity, log1m, rogers, slashed_cyclic_dilog
from stateint.evaluators.default import DefaultEvaluator
from stateint.evaluators.gluing import resolve_strip_set
from stateint.evaluators.report import EvaluationReport, Method
from stateint.exceptions import InvalidSpec
from stateint.faddeev.pair import AdmissiblePair
from stateint.sums import ABSpec, big_g_mn, big_g_n
from stateint.sums.state_sums import fsum_complex

SIDE = 1


def winding(spec, pair, point):
    """Integer m with A (log z - pi i) - B Log(1 - z) = 2 pi i m"""
    total = spec.A * (point.log_z.value - 1j * math.pi) - \
        spec.B * log1m(point.z, SIDE)
    return round((total / (2j * math.pi)).real)


def gluing_phase(pair, point, m):
    return cmath.exp(2j * math.pi * m *
                     (1 + 2 * (pair.M + pair.N) - 2j * pair.s * point.w) /
                     (4 * pair.M * pair.N))


def thm1_prefactor(spec, pair):
    M, N = pair.M, pair.N
    return cmath.exp(1j * math.pi * (spec.B + 3 * spec.A * (M + N + 1) ** 2 - 6 * M * N) /
                     (12 * M * N)) / pair.s


def cor_m1_prefactor(spec, N):
    return cmath.exp(1j * math.pi * (spec.B + 3 * spec.A * (N + 2) ** 2 - 6 * N) /
                     (12 * N)) / math.sqrt(N)


def rogers_exponential(spec, pair, point):
    """exp(i B R(z) / (2 pi s^2)) with the branch of log z carried by w"""
    return cmath.exp(1j * spec.B * rogers(point.z, point.log_z, SIDE) /
                     (2 * math.pi * pair.s ** 2))


def _residue_denominator(spec, z):
    """z g'(z) at a solution of g(z) = 1"""
    return spec.A + spec.B * z / (1.0 - z)


def thm1_term(spec, pair, point, theta_plus=None):
    """Summand of one strip point, with its factors
    :param theta_plus: overrides the N-th root of z used by the
                       cyclic dilogarithm and the state-sum
    :returns: dict of complex factors, 'summand' is their product
    """
    theta_plus = point.theta_plus if theta_plus is None else theta_plus
    M, N, B = pair.M, pair.N, spec.B
    alpha = (2 * N + 1) * (2 * M + 1) / (4 * M * N)
    geometric = cmath.exp(alpha * B * log1m(point.z, SIDE)) / (
        _residue_denominator(spec, point.z) *
        slashed_cyclic_dilog(N, theta_plus, pair.q_plus, SIDE) ** B *
        slashed_cyclic_dilog(M, point.theta_minus, pair.q_minus, SIDE) ** B)
    m = winding(spec, pair, point)
    term = {'rogers_exp': rogers_exponential(spec, pair, point),
            'geometric': geometric,
            'state_sum': big_g_mn(spec, pair, theta_plus, point.theta_minus),
            'phase': gluing_phase(pair, point, m)}
    term['summand'] = term['rogers_exp'] * geometric * term['state_sum'] * term['phase']
    term['winding'] = m
    return term


def cor_m1_term(spec, pair, point):
    """Summand of the M = 1 specialization"""
    N, B = pair.N, spec.B
    if N == 1:
        geometric = cmath.exp(B / 4 * log1m(point.z, SIDE)) / \
            _residue_denominator(spec, point.z)
        state_sum = 1 + 0j
    else:
        geometric = cmath.exp((2 * N + 3) / (4 * N) * B * log1m(point.z, SIDE)) / (
            _residue_denominator(spec, point.z) *
            slashed_cyclic_dilog(N, point.theta_plus, pair.q_plus, SIDE) ** B)
        state_sum = big_g_n(spec, '+', N, point.theta_plus)
    m = winding(spec, pair, point)
    term = {'rogers_exp': rogers_exponential(spec, pair, point),
            'geometric': geometric, 'state_sum': state_sum,
            'phase': gluing_phase(pair, point, m)}
    term['summand'] = term['rogers_exp'] * geometric * state_sum * term['phase']
    term['winding'] = m
    return term


def _check_ab(spec):
    if not isinstance(spec, ABSpec):
        raise InvalidSpec("the closed form covers the AB integrand only, got {}"
                          .format(spec))


def _report(spec, pair, lam, points, prefactor, terms):
    value = prefactor * fsum_complex(t['summand'] for t in terms)
    return EvaluationReport(
        value=value, method=Method.CLOSED_FORM, strip_points=points, lam=lam,
        params=dict(spec.params(), M=pair.M, N=pair.N, P=pair.P, Q=pair.Q),
        diagnostics={'lambda': lam, 'prefactor': prefactor,
                     'terms': [dict(t, w=p.w) for t, p in zip(terms, points)]})


class ClosedFormEvaluator(DefaultEvaluator):
    """Sum over the strip set of the closed-form summands. With
    ``specialize=True`` pairs (1, N) go through the M = 1 formula."""
    method = Method.CLOSED_FORM

    def _evaluate(self, spec, pair, lam):
        _check_ab(spec)
        lam, points = resolve_strip_set(spec, pair, lam)
        if self.options.get('specialize') and pair.M == 1:
            terms = [cor_m1_term(spec, pair, p) for p in points]
            return _report(spec, pair, lam, points,
                           cor_m1_prefactor(spec, pair.N), terms)
        terms = [thm1_term(spec, pair, p) for p in points]
        return _report(spec, pair, lam, points, thm1_prefactor(spec, pair), terms)


def evaluate_thm1(spec, pair, lam=None):
    """The AB state-integral at b^2 = M/N as a finite sum over the strip set
    :raises InvalidSpec: for the pretzel integrand
    :raises NonGenericLambda: when an explicit lambda is not generic
    """
    return ClosedFormEvaluator().evaluate(spec, pair, lam)


def evaluate_cor_m1(spec, N, lam=None):
    """The M = 1 specialization, with G+_N and a single cyclic dilogarithm"""
    return ClosedFormEvaluator(specialize=True).evaluate(
        spec, AdmissiblePair(1, N), lam)


def field_descent_ratios(spec, pair, lam=None):
    """Per strip point, summand(zeta_N theta+) / summand(theta+) with z
    and theta- fixed. A ratio of 1 means the summand does not depend on
    the choice of N-th root of z. Exploratory, nothing asserts on it.
    """
    _check_ab(spec)
    _, points = resolve_strip_set(spec, pair, lam)
    rotation = RootOfUnity(pair.N, 1).value
    ratios = []
    for point in points:
        base = thm1_term(spec, pair, point)['summand']
        turned = thm1_term(spec, pair, point, point.theta_plus * rotation)['summand']
        ratios.append(turned / base)
    return ratios
