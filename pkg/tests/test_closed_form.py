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
import math

import pytest

from stateint.evaluators import (EvaluationReport, Method, evaluate_cor_m1,
                                 evaluate_residue_sum, evaluate_thm1,
                                 field_descent_ratios)
from stateint.evaluators.closed_form import thm1_prefactor
from stateint.exceptions import InvalidSpec, NonFinite
from stateint.faddeev import AdmissiblePair
from stateint.sums import ABSpec, PretzelSpec
from stateint.suites.thm1 import e, figure_eight_value, ledger_errors, volume


class TestFigureEight:
    def test_volume(self):
        assert abs(volume() - 2.029883212819307) < 1e-13

    def test_value(self):
        report = evaluate_thm1(ABSpec(1, 2), AdmissiblePair(1, 1))
        assert abs(report.value - figure_eight_value()) < 1e-10
        assert abs(report.value - (0.328714 + 0.189784j)) < 1e-5
        assert report.method == Method.CLOSED_FORM
        assert report.lam == -0.05
        assert len(report.strip_points) == 2
        assert [t['winding'] for t in report.diagnostics['terms']] == [0, 0]

    def test_ledger(self):
        assert ledger_errors() < 1e-12
        assert abs(thm1_prefactor(ABSpec(1, 2), AdmissiblePair(1, 1)) - e(-1 / 24)) < 1e-15

    def test_params(self):
        report = evaluate_thm1(ABSpec(1, 2), AdmissiblePair(2, 3))
        assert report.params == {'spec': 'ab', 'A': 1, 'B': 2, 'M': 2, 'N': 3,
                                 'P': -1, 'Q': 1}


class TestAgreement:
    @pytest.mark.parametrize('A,B', [(1, 2), (1, 3), (2, 3)])
    @pytest.mark.parametrize('M,N', [(1, 1), (1, 2), (2, 1), (2, 3)])
    def test_residue_sum(self, A, B, M, N):
        spec, pair = ABSpec(A, B), AdmissiblePair(M, N)
        closed = evaluate_thm1(spec, pair).value
        assert abs(evaluate_residue_sum(spec, pair).value - closed) < 1e-9

    @pytest.mark.parametrize('A,B', [(1, 2), (1, 3)])
    @pytest.mark.parametrize('N', [1, 2, 3])
    def test_specialization(self, A, B, N):
        spec = ABSpec(A, B)
        special = evaluate_cor_m1(spec, N)
        assert abs(special.value - evaluate_thm1(spec, AdmissiblePair(1, N)).value) < 1e-11

    @pytest.mark.parametrize('fraction', [0.23, 0.55, 0.9])
    def test_lambda_invariance(self, fraction):
        spec, pair = ABSpec(1, 3), AdmissiblePair(2, 3)
        low, high = spec.lambda_range(pair)
        lam = low + fraction * (high - low)
        base = evaluate_thm1(spec, pair).value
        assert abs(evaluate_thm1(spec, pair, lam).value - base) < 1e-9
        assert abs(evaluate_residue_sum(spec, pair, lam).value - base) < 1e-9

    @pytest.mark.parametrize('shift', [-2, -1, 1, 2])
    def test_bezout_invariance(self, shift):
        spec, pair = ABSpec(1, 2), AdmissiblePair(3, 5)
        base = evaluate_thm1(spec, pair).value
        assert abs(evaluate_thm1(spec, pair.with_bezout(shift)).value - base) < 1e-11

    def test_field_descent_runs(self):
        ratios = field_descent_ratios(ABSpec(1, 2), AdmissiblePair(2, 3))
        assert len(ratios) == 2
        assert all(math.isfinite(abs(r)) for r in ratios)


class TestErrors:
    def test_pretzel_has_no_closed_form(self):
        with pytest.raises(InvalidSpec):
            evaluate_thm1(PretzelSpec(), AdmissiblePair(1, 1))

    def test_non_finite_report(self):
        with pytest.raises(NonFinite):
            EvaluationReport(value=complex(float('nan'), 0), method=Method.CLOSED_FORM)
