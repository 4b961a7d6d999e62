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
"""Residue-sum evaluation, valid for every integrand spec.

The state-integral equals 1/(i s) times the sum over the strip set of
f(w) S(theta+, theta-) / (z g'(z)), where f is the integrand shifted by
c_b and evaluated through the rational closed forms of Phi_b, and S is
the state-sum G_{M,N}.
"""
from stateint.evaluators.default import DefaultEvaluator
from stateint.evaluators.gluing import resolve_strip_set
from stateint.evaluators.report import EvaluationReport, Method
from stateint.sums import big_g_mn
from stateint.sums.state_sums import fsum_complex

SIDE = 1


def residue_term(spec, pair, point):
    term = {'integrand': spec.shifted_integrand(pair, point.w, SIDE),
            'state_sum': big_g_mn(spec, pair, point.theta_plus, point.theta_minus),
            'z_g_prime': spec.z_g_prime(point.z)}
    term['summand'] = term['integrand'] * term['state_sum'] / term['z_g_prime']
    return term


class ResidueEvaluator(DefaultEvaluator):
    method = Method.RESIDUE_SUM

    def _evaluate(self, spec, pair, lam):
        lam, points = resolve_strip_set(spec, pair, lam)
        terms = [residue_term(spec, pair, p) for p in points]
        value = fsum_complex(t['summand'] for t in terms) / (1j * pair.s)
        return EvaluationReport(
            value=value, method=self.method, strip_points=points, lam=lam,
            params=dict(spec.params(), M=pair.M, N=pair.N),
            diagnostics={'lambda': lam,
                         'terms': [dict(t, w=p.w) for t, p in zip(terms, points)]})


def evaluate_residue_sum(spec, pair, lam=None):
    """State-integral of spec at b^2 = M/N as a residue sum
    :returns: EvaluationReport with method residue_sum
    """
    return ResidueEvaluator().evaluate(spec, pair, lam)
