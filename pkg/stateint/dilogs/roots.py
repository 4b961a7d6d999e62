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
"""Exact roots of unity and logarithms with an explicit branch"""
import cmath
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2 pi i exponent / order), always built from the reduced
    exact angle and never by repeated multiplication"""
    order: int
    exponent: int = 1

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive, got {}".format(self.order))
        object.__setattr__(self, 'exponent', self.exponent % self.order)

    @property
    def value(self):
        return cmath.rect(1.0, 2.0 * math.pi * self.exponent / self.order)

    def power(self, k):
        """The k-th power, k any integer
        :returns: RootOfUnity
        """
        return RootOfUnity(self.order, self.exponent * k)

    def __complex__(self):
        return self.value


def power_of(q, k):
    """q**k, exact-angle when q is a RootOfUnity
    :param q: RootOfUnity or complex
    :param k: integer exponent
    """
    if isinstance(q, RootOfUnity):
        return q.power(k).value
    return complex(q) ** k


@dataclass(frozen=True)
class BranchedLog:
    """A chosen value of log(base)"""
    value: complex
    base: complex

    def __post_init__(self):
        if self.base == 0:
            raise ValueError("log of zero")
        drift = abs(cmath.exp(self.value) - self.base) / abs(self.base)
        if drift > 1e-12:
            raise ValueError("exp({}) does not match {}".format(
                self.value, self.base))

    @classmethod
    def principal(cls, base):
        return cls(cmath.log(base), base)

    @classmethod
    def lift(cls, value):
        """The branched log whose base is exp(value)"""
        return cls(complex(value), cmath.exp(value))

    @property
    def sheet(self):
        """Integer k with value = Log(base) + 2 pi i k"""
        return round((self.value - cmath.log(self.base)).imag / (2 * math.pi))
