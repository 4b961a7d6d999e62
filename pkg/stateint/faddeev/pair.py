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
"""Admissible pairs (M, N): b^2 = M/N with M, N coprime"""
import math
from dataclasses import dataclass
from typing import Optional

from stateint.dilogs.roots import RootOfUnity
from stateint.exceptions import NotCoprime


def bezout(M, N):
    """Integers (P, Q) with M P + N Q = 1.

    P is the representative of M^{-1} mod N of least absolute value,
    positive on ties. N = 1 gives (0, 1), except (1, 1) which gives (1, 0).
    :raises NotCoprime: when gcd(M, N) != 1 or an entry is < 1
    """
    if M < 1 or N < 1:
        raise NotCoprime("M and N must be positive, got ({}, {})".format(M, N))
    if math.gcd(M, N) != 1:
        raise NotCoprime("({}, {}) are not coprime".format(M, N))
    if N == 1:
        return (1, 0) if M == 1 else (0, 1)
    P = pow(M, -1, N)
    if P > N / 2:
        P -= N
    return P, (1 - M * P) // N


@dataclass(frozen=True)
class AdmissiblePair:
    """Coprime (M, N) together with the derived constants of b = sqrt(M/N)"""
    M: int
    N: int
    P: Optional[int] = None
    Q: Optional[int] = None

    def __post_init__(self):
        P, Q = bezout(self.M, self.N)
        if self.P is None and self.Q is None:
            object.__setattr__(self, 'P', P)
            object.__setattr__(self, 'Q', Q)
        elif self.P is None or self.Q is None or \
                self.M * self.P + self.N * self.Q != 1:
            raise NotCoprime("M P + N Q != 1 for ({}, {}, {}, {})".format(
                self.M, self.N, self.P, self.Q))

    def with_bezout(self, shift):
        """The pair with (P, Q) replaced by (P + shift N, Q - shift M)"""
        return AdmissiblePair(self.M, self.N, self.P + shift * self.N,
                              self.Q - shift * self.M)

    @property
    def b(self):
        return math.sqrt(self.M / self.N)

    @property
    def s(self):
        return math.sqrt(self.M * self.N)

    @property
    def c_b(self):
        return 0.5j * (self.b + 1.0 / self.b)

    @property
    def q_plus(self):
        """zeta_N^M = exp(2 pi i b^2)"""
        return RootOfUnity(self.N, self.M)

    @property
    def q_minus(self):
        """zeta_M^N = exp(2 pi i / b^2)"""
        return RootOfUnity(self.M, self.N)

    @property
    def q_tilde_inverse(self):
        """1 / q~ with q~ = exp(-2 pi i / b^2); equals q_minus"""
        return self.q_minus.value
