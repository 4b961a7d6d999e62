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
import math

import numpy as np
import pytest

from stateint.exceptions import OutOfStrip, PoleProximity
from stateint.faddeev import (AdmissiblePair, log_phi_integral, log_phi_strip, phi,
                              phi_poles, phi_strip, phi_unit, phi_zero, phi_zeros)
from stateint.faddeev.continuation import reduction_path

B_VALUES = [1.0, 0.8, math.sqrt(2 / 3), 0.5]


class TestStrip:
    def test_zero(self):
        assert abs(phi_strip(1, 0) - cmath.exp(1j * math.pi / 12)) < 1e-10
        for b in B_VALUES:
            assert abs(phi_strip(b, 0) - phi_zero(b)) < 1e-10

    def test_unit_closed_form(self):
        for x in [0.3j, -0.5 + 0.2j, 0.7 - 0.4j, -1.2]:
            assert abs(phi_strip(1, x) - phi_unit(x)) < 1e-9

    def test_pair_argument(self):
        pair = AdmissiblePair(2, 3)
        assert abs(phi_strip(pair, 0.1 + 0.2j) - phi_strip(pair.b, 0.1 + 0.2j)) < 1e-15

    @pytest.mark.parametrize('b', B_VALUES)
    def test_unitary_on_real_axis(self, b):
        for x in [-1.5, -0.2, 0.4, 2.0]:
            assert abs(abs(phi_strip(b, x)) - 1) < 1e-9

    @pytest.mark.parametrize('b', B_VALUES)
    def test_inversion_without_symmetry(self, b):
        xs = np.array([0.3 + 0.2j, -0.6 - 0.1j, 0.1 + 0.5j])
        lhs = log_phi_integral(b, xs) + log_phi_integral(b, -xs)
        rhs = 1j * math.pi * xs * xs + 2j * math.pi * (b * b + 1 / b ** 2) / 24
        assert np.max(np.abs(np.exp(lhs - rhs) - 1)) < 1e-9

    def test_integral_agrees_with_strip(self):
        xs = np.array([0.4 + 0.1j, 1.1 - 0.3j, 0.05j])
        direct = np.exp(log_phi_integral(0.8, xs))
        mapped = np.exp(log_phi_strip(0.8, xs))
        assert np.max(np.abs(direct - mapped)) < 1e-9

    @pytest.mark.parametrize('b', B_VALUES)
    def test_shift(self, b):
        for p in (b, 1 / b):
            if p / 2 >= 0.9 * 0.5 * (b + 1 / b):
                continue
            for x in [-0.3, 0.2, 0.5]:
                ratio = phi_strip(b, x - 0.5j * p) / phi_strip(b, x + 0.5j * p)
                assert abs(ratio - (1 + math.exp(2 * math.pi * p * x))) < \
                    1e-9 * (1 + math.exp(2 * math.pi * p * x))

    def test_asymptotics(self):
        assert abs(phi_strip(1, -3) - 1) < 1e-4
        assert abs(phi_strip(1, 3) - phi_zero(1) ** 2 * cmath.exp(9j * math.pi)) < 1e-4

    def test_self_dual(self):
        for x in [0.2 - 0.3j, -0.7 + 0.1j]:
            assert abs(phi_strip(0.8, x) - phi_strip(1.25, x)) < 1e-9

    def test_out_of_strip(self):
        with pytest.raises(OutOfStrip):
            phi_strip(1, 0.96j)
        with pytest.raises(OutOfStrip):
            log_phi_strip(1, [0.1, -1j])
        with pytest.raises(ValueError):
            phi_strip(-1, 0)


class TestContinuation:
    def test_reduction_path(self):
        y, steps = reduction_path(1, 2.5j)
        assert steps == [-1.0, -1.0]
        assert abs(y - 0.5j) < 1e-15
        y, steps = reduction_path(1, 0.5j)
        assert steps == [] and y == 0.5j

    def test_matches_strip_inside(self):
        assert phi(0.8, 0.3 + 0.2j) == phi_strip(0.8, 0.3 + 0.2j)

    @pytest.mark.parametrize('b', [1.0, 0.8, math.sqrt(2 / 3)])
    def test_quasi_periodicity(self, b):
        for x in [0.2 + 0.9j, -0.4 + 1.3j, 0.1 - 1.6j]:
            lhs = phi(b, x + 1j * b)
            rhs = phi(b, x) / (1 + cmath.exp(1j * math.pi * b * b + 2 * math.pi * b * x))
            assert abs(lhs - rhs) < 1e-9 * abs(rhs)

    @pytest.mark.parametrize('x', [1j, 2j, 3j])
    def test_poles(self, x):
        with pytest.raises(PoleProximity):
            phi(1, x)

    def test_zero(self):
        assert abs(phi(1, -1j)) < 1e-12

    def test_lattice(self):
        b = 0.8
        poles = phi_poles(b, 3)
        assert len(poles) == 6
        assert abs(poles[0] - 0.5j * (b + 1 / b)) < 1e-15
        assert all(p.imag <= q.imag for p, q in zip(poles, poles[1:]))
        assert phi_zeros(b, 3) == [-p for p in poles]
        for pole in poles:
            with pytest.raises(PoleProximity):
                phi(b, pole)
