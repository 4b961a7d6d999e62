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
import pytest

from stateint.exceptions import NoConvergence
from stateint.suites import SUITES, run_suites, summary
from stateint.suites.default import DefaultSuite, max_error


class FailingSuite(DefaultSuite):
    name = 'failing'
    index = 99

    def checks(self):
        def broken():
            raise NoConvergence("never converges")
        yield 'exact', lambda: 0.0, 1e-12, True
        yield 'broken', broken, 1.0, True
        yield 'finding', lambda: 2.0, 1.0, False


class TestSuites:
    def test_order(self):
        assert list(SUITES) == ['phi', 'sums', 'thm1', 'thm2', 'pretzel', 'props']

    def test_props(self):
        rows = run_suites('props', seed=3)
        assert [r['check'] for r in rows][0] == 'li2 reflection'
        assert all(r['passed'] for r in rows)
        assert summary(rows) == (5, 5, 0)

    @pytest.mark.parametrize('name', list(SUITES))
    def test_gating_checks_pass(self, name):
        rows = run_suites(name, seed=7)
        failed = [(r['check'], r['error'], r['note'])
                  for r in rows if r['gating'] and not r['passed']]
        assert rows
        assert failed == []

    def test_deterministic(self):
        first = [r['error'] for r in run_suites('props', seed=7)]
        second = [r['error'] for r in run_suites('props', seed=7)]
        assert first == second

    def test_unknown(self):
        with pytest.raises(ValueError):
            run_suites('nope')

    def test_rows(self):
        rows = FailingSuite().run()
        assert [r['passed'] for r in rows] == [True, False, False]
        assert rows[1]['note'] == 'NoConvergence'
        assert rows[1]['error'] == float('inf')
        assert summary(rows) == (1, 2, 1)

    def test_max_error(self):
        assert max_error([]) == 0.0
        assert max_error(iter([1e-3, 2e-3])) == 2e-3
