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

from stateint.dilogs import (RootOfUnity, cyclic_dilog, cyclic_dilog_log_derivative,
                             pochhammer, power_of, slashed_cyclic_dilog)
from stateint.exceptions import DivisionByZero, DomainError


class TestRootOfUnity:
    def test_exact_angle(self):
        zeta = RootOfUnity(7, 3)
        assert abs(abs(zeta.value) - 1) < 1e-15
        assert abs(zeta.value ** 7 - 1) < 1e-12
        assert zeta.power(7).value == 1
        assert RootOfUnity(5, 12) == RootOfUnity(5, 2)
        assert power_of(RootOfUnity(4, 1), -1) == RootOfUnity(4, 3).value

    def test_order(self):
        with pytest.raises(ValueError):
            RootOfUnity(0)


class TestCyclicDilog:
    def test_trivial(self):
        assert cyclic_dilog(1, 0.3 + 0.2j, RootOfUnity(1)) == 1
        assert cyclic_dilog(5, 0, RootOfUnity(5, 2)) == 1
        assert slashed_cyclic_dilog(5, 0, RootOfUnity(5, 2)) == 1

    def test_order_two(self):
        x = 0.3 - 0.4j
        assert abs(cyclic_dilog(2, x, RootOfUnity(2)) - cmath.sqrt(1 + x)) < 1e-15
        assert abs(slashed_cyclic_dilog(2, x, RootOfUnity(2)) -
                   (1 - x) * cmath.sqrt(1 + x)) < 1e-15
        assert abs(slashed_cyclic_dilog(1, x, 1) - (1 - x)) < 1e-15

    def test_vanishing_factor(self):
        with pytest.raises(DomainError):
            cyclic_dilog(3, RootOfUnity(3, 2).value, RootOfUnity(3))

    def test_functional_equation(self):
        rng = np.random.default_rng(11)
        for N in range(2, 13):
            zeta = RootOfUnity(N)
            for _ in range(5):
                x = cmath.rect(0.9 * math.sqrt(rng.uniform()), rng.uniform(-math.pi, math.pi))
                ratio = cyclic_dilog(N, zeta.value * x, zeta) / cyclic_dilog(N, x, zeta)
                assert abs(ratio ** N * (1 - x ** N) / (1 - x) ** N - 1) < 1e-10

    @pytest.mark.parametrize('M', range(2, 13))
    def test_log_derivative_identity(self, M):
        rng = np.random.default_rng(M)
        for j in range(1, M):
            if math.gcd(j, M) != 1:
                continue
            q = RootOfUnity(M, j)
            for _ in range(10):
                x = cmath.rect(0.9 * math.sqrt(rng.uniform()), rng.uniform(-math.pi, math.pi))
                lhs = sum(x ** m / (1 - q.power(m).value) for m in range(1, M))
                rhs = (M - 1) / 2 * x ** M + \
                    (1 - x ** M) * x * cyclic_dilog_log_derivative(M, x, q)
                assert abs(lhs - rhs) < 1e-9

    def test_log_derivative_numeric(self):
        q, x, h = RootOfUnity(5, 2), 0.2 + 0.1j, 1e-6
        numeric = (cmath.log(cyclic_dilog(5, x + h, q)) -
                   cmath.log(cyclic_dilog(5, x - h, q))) / (2 * h)
        assert abs(numeric - cyclic_dilog_log_derivative(5, x, q)) < 1e-8


class TestPochhammer:
    def test_small_indices(self):
        a, q = 0.4 + 0.1j, cmath.exp(0.3j)
        assert pochhammer(a, q, 0) == 1
        assert pochhammer(a, q, 1) == 1 - a
        assert abs(pochhammer(a, q, -1) * pochhammer(a / q, q, 1) - 1) < 1e-15

    def test_index_addition(self):
        a, q = 0.5 - 0.2j, cmath.exp(0.7j)
        for k in range(-5, 6):
            for l in range(-5, 6):
                lhs = pochhammer(a, q, k + l)
                rhs = pochhammer(a, q, k) * pochhammer(a * q ** k, q, l)
                assert abs(lhs - rhs) < 1e-11 * abs(lhs)

    def test_vanishing(self):
        q = RootOfUnity(4)
        with pytest.raises(DivisionByZero):
            pochhammer(q.value, q, -1)
