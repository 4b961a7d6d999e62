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
import cmath
import json
import math

import pytest

import stateint.cli
from stateint.cli import main
from stateint.suites.thm1 import figure_eight_value


def complex_of(cell):
    return complex(cell['re'], cell['im'])


class TestEval:
    def test_closed_form(self, capsys):
        assert main(['eval', '--A', '1', '--B', '2', '--M', '1', '--N', '1']) == 0
        out = json.loads(capsys.readouterr().out)
        assert out['method'] == 'closed_form'
        assert abs(complex_of(out['value']) - figure_eight_value()) < 1e-10
        assert len(out['strip_points']) == 2

    def test_text_output(self, capsys):
        assert main(['eval', '--A', '1', '--B', '2', '--M', '2', '--N', '3',
                     '--method', 'residue', '--output', 'text']) == 0
        assert capsys.readouterr().out.startswith('residue_sum: ')

    def test_explicit_lambda(self, capsys):
        assert main(['eval', '--A', '1', '--B', '2', '--M', '1', '--N', '1',
                     '--lambda', '-0.3']) == 0
        out = json.loads(capsys.readouterr().out)
        assert out['diagnostics']['lambda'] == -0.3

    @pytest.mark.parametrize('argv', [
        ['--A', '1', '--B', '2', '--M', '2', '--N', '2'],
        ['--A', '2', '--B', '1', '--M', '1', '--N', '1'],
        ['--A', '1', '--B', '2', '--M', '1', '--N', '1', '--tol', '-1'],
        ['--A', '1', '--B', '2', '--M', '1', '--N', '1', '--lambda', '0.5'],
        ['--A', '1', '--B', '2', '--M', '1', '--N', '1', '--panels', '0'],
    ])
    def test_usage_errors(self, argv, capsys):
        assert main(['eval'] + argv) == 2
        assert capsys.readouterr().err

    def test_missing_argument(self, capsys):
        assert main(['eval', '--A', '1']) == 2

    def test_non_generic_lambda(self, capsys):
        assert main(['eval', '--A', '1', '--B', '2', '--M', '1', '--N', '1',
                     '--lambda', str(-1 / 6)]) == 1
        assert json.loads(capsys.readouterr().out)['error'] == 'NonGenericLambda'

    def test_computation_value_error(self, capsys, monkeypatch):
        def drifting(*args):
            raise ValueError("exp(0.1j) does not match 1")
        monkeypatch.setattr(stateint.cli, 'evaluate_thm1', drifting)
        assert main(['eval', '--A', '1', '--B', '2', '--M', '1', '--N', '1']) == 1
        assert json.loads(capsys.readouterr().out)['error'] == 'ValueError'

    @pytest.mark.parametrize('argv', [
        ['pretzel', '--M', '1', '--N', '1', '--lambda', '0.2'],
        ['pretzel', '--M', '1', '--N', '1', '--quad-tol', '1e-20'],
        ['roots', '--M', '1', '--N', '1', '--pretzel', '--lambda', '0.2'],
    ])
    def test_rejected_before_computation(self, argv, capsys, monkeypatch):
        def never(*args):
            raise AssertionError("computation started")
        monkeypatch.setattr(stateint.cli, 'resolve_strip_set', never)
        monkeypatch.setattr(stateint.cli, 'evaluate_residue_sum', never)
        assert main(argv) == 2
        assert capsys.readouterr().err.startswith('UsageError: ')


class TestPhi:
    def test_zero(self, capsys):
        assert main(['phi', '--M', '1', '--N', '1', '--x', '0']) == 0
        out = json.loads(capsys.readouterr().out)
        value = complex_of(out['values']['integral'])
        assert abs(value - cmath.exp(1j * math.pi / 12)) < 1e-10

    def test_both(self, capsys):
        assert main(['phi', '--M', '2', '--N', '3', '--x', '0.1+0.05i',
                     '--method', 'both']) == 0
        out = json.loads(capsys.readouterr().out)
        assert out['difference'] < 1e-8

    def test_pole(self, capsys):
        assert main(['phi', '--M', '1', '--N', '1', '--x', 'i']) == 1
        assert json.loads(capsys.readouterr().out)['error'] == 'PoleProximity'

    def test_bad_literal(self, capsys):
        assert main(['phi', '--M', '1', '--N', '1', '--x', '1e3']) == 2


class TestRoots:
    @pytest.mark.parametrize('argv,count', [
        (['--A', '1', '--B', '2'], 2), (['--pretzel'], 6), (['--A', '1', '--B', '3'], 3)])
    def test_counts(self, argv, count, capsys):
        assert main(['roots', '--M', '1', '--N', '1'] + argv) == 0
        out = json.loads(capsys.readouterr().out)
        assert len(out['strip_points']) == count

    def test_pretzel_extras(self, capsys):
        assert main(['roots', '--M', '1', '--N', '1', '--pretzel']) == 0
        out = json.loads(capsys.readouterr().out)
        assert out['cubics']['real_plus'] == 3
        assert len(out['torsion']) == 3

    def test_text(self, capsys):
        assert main(['roots', '--M', '1', '--N', '2', '--A', '1', '--B', '2',
                     '--output', 'text']) == 0
        assert capsys.readouterr().out.startswith('lambda: ')


class TestVerify:
    def test_props(self, capsys):
        assert main(['verify', '--suite', 'props']) == 0
        out = json.loads(capsys.readouterr().out)
        assert out['passed'] == out['total'] == 5

    def test_unknown_suite(self, capsys):
        assert main(['verify', '--suite', 'nope']) == 2
