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
import json

import pandas as pd

from stateint.evaluators import EvaluationReport, Method, evaluate_residue_sum, evaluate_thm1
from stateint.faddeev import AdmissiblePair
from stateint.mappers import JSONMapper, TableMapper
from stateint.sums import ABSpec, PretzelSpec


class TestJSONMapper:
    def test_schema(self):
        report = evaluate_thm1(ABSpec(1, 2), AdmissiblePair(1, 1))
        mapped = JSONMapper().map(report)
        assert list(mapped) == ['value', 'method', 'params', 'strip_points', 'diagnostics']
        assert mapped['method'] == 'closed_form'
        assert set(mapped['value']) == {'re', 'im'}
        assert mapped['diagnostics']['lambda'] == -0.05
        point = mapped['strip_points'][0]
        assert {'w', 'z', 'log_z_im_over_pi'} <= set(point)

    def test_round_trip(self):
        mapper = JSONMapper()
        for report in (evaluate_thm1(ABSpec(1, 3), AdmissiblePair(2, 3)),
                       evaluate_residue_sum(PretzelSpec(), AdmissiblePair(1, 2))):
            assert mapper.load(mapper.dumps(mapper.map(report))) == report

    def test_quadrature_like_report(self):
        mapper = JSONMapper()
        report = EvaluationReport(value=0.1 - 2j, method=Method.QUADRATURE,
                                  params={'spec': 'ab', 'A': 1, 'B': 2},
                                  diagnostics={'est_error': 1.5e-12, 'panels': 32})
        text = mapper.dumps(mapper.map(report))
        assert json.loads(text)['diagnostics']['panels'] == 32
        assert mapper.load(text) == report

    def test_floats(self):
        mapper = JSONMapper()
        assert mapper.dumps({'x': 0.1}) == '{"x": 0.10000000000000001}'
        assert mapper.dumps([float('nan'), float('-inf'), True, None]) == \
            '[NaN, -Infinity, true, null]'
        assert mapper.dumps(0.5j) == '{"re": 0, "im": 0.5}'


class TestTableMapper:
    def test_frame(self):
        rows = [{'check': 'a', 'error': 1e-12, 'passed': True},
                {'check': 'b', 'error': 2.5, 'passed': False}]
        frame = TableMapper().map(rows)
        assert isinstance(frame, pd.DataFrame)
        assert frame.shape == (2, 3)
        assert list(frame.columns) == ['check', 'error', 'passed']

    def test_complex_cells(self):
        frame = TableMapper(digits=3).map([{'z': 0.5 - 0.125j}])
        assert frame['z'][0] == '0.5-0.125i'

    def test_text(self):
        text = TableMapper(digits=4).to_text([{'name': 'x', 'value': 3.14159265}])
        assert '3.142' in text
        assert TableMapper().to_text([]) == '(empty)'
