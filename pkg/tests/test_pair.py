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

from stateint.exceptions import NotCoprime
from stateint.faddeev import AdmissiblePair, bezout


class TestBezout:
    @pytest.mark.parametrize('M,N,expected', [
        (1, 1, (1, 0)), (2, 3, (-1, 1)), (3, 5, (2, -1)), (2, 1, (0, 1)),
        (1, 2, (1, 0)), (4, 7, (2, -1))])
    def test_examples(self, M, N, expected):
        assert bezout(M, N) == expected

    @pytest.mark.parametrize('M,N', [(2, 2), (0, 3), (6, 9)])
    def test_not_coprime(self, M, N):
        with pytest.raises(NotCoprime):
            bezout(M, N)


class TestAdmissiblePair:
    @pytest.mark.parametrize('M,N', [(1, 1), (1, 2), (2, 3), (3, 5), (4, 7)])
    def test_invariants(self, M, N):
        pair = AdmissiblePair(M, N)
        assert M * pair.P + N * pair.Q == 1
        assert abs(pair.b * pair.s - M) < 1e-13
        assert abs(pair.s / pair.b - N) < 1e-13
        assert abs(pair.s * (pair.b + 1 / pair.b) - (M + N)) < 1e-13
        assert abs(pair.c_b - 0.5j * (pair.b + 1 / pair.b)) < 1e-15
        assert abs(pair.q_plus.value ** N - 1) < 1e-12
        assert abs(pair.q_minus.value ** M - 1) < 1e-12
        assert abs(pair.q_plus.value - complex(math.cos(2 * math.pi * pair.b ** 2),
                                               math.sin(2 * math.pi * pair.b ** 2))) < 1e-12
        assert pair.q_tilde_inverse == pair.q_minus.value

    def test_with_bezout(self):
        pair = AdmissiblePair(2, 3).with_bezout(2)
        assert (pair.P, pair.Q) == (5, -3)
        assert AdmissiblePair(2, 3, 2, -1).P == 2

    def test_rejects(self):
        with pytest.raises(NotCoprime):
            AdmissiblePair(2, 4)
        with pytest.raises(NotCoprime):
            AdmissiblePair(2, 3, 1, 1)
