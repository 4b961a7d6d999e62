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
"""Cyclic dilogarithm D_N(x; q) and q-Pochhammer symbols"""
import cmath

from stateint.dilogs.dilog import log1m
from stateint.dilogs.roots import power_of
from stateint.exceptions import DivisionByZero, DomainError

VANISHING = 1e-14


def _factor_logs(N, x, q, side):
    """(k, Log(1 - q^k x)) for k = 1..N-1"""
    for k in range(1, N):
        y = power_of(q, k) * x
        if abs(1.0 - y) < VANISHING:
            raise DomainError(
                "factor 1 - q^{} x vanishes at x = {}".format(k, x))
        yield k, log1m(y, side)


def cyclic_dilog(N, x, q, side=None):
    """D_N(x; q) = prod_{k=1}^{N-1} (1 - q^k x)^{k/N}, each factor on the
    principal branch
    :param N: positive integer
    :param x: complex
    :param q: RootOfUnity (or complex) root of unity
    :param side: forwarded to log1m for factors on their cut
    """
    exponent = sum(k / N * log for k, log in _factor_logs(N, complex(x), q, side))
    return cmath.exp(exponent)


def slashed_cyclic_dilog(N, x, q, side=None):
    """(1 - x q^N) D_N(x; q)"""
    return (1.0 - complex(x) * power_of(q, N)) * cyclic_dilog(N, x, q, side)


def cyclic_dilog_log_derivative(N, x, q):
    """d/dx log D_N(x; q) = sum_k (k/N) (-q^k) / (1 - q^k x)"""
    total = 0j
    for k in range(1, N):
        qk = power_of(q, k)
        denominator = 1.0 - qk * x
        if abs(denominator) < VANISHING:
            raise DomainError("pole of log D_{} at x = {}".format(N, x))
        total += k / N * (-qk) / denominator
    return total


def pochhammer(a, q, n):
    """(a; q)_n for any integer n.

    n >= 0: prod_{j=0}^{n-1} (1 - a q^j)
    n < 0:  prod_{j=1}^{|n|} (1 - a q^{-j})^{-1}
    """
    a = complex(a)
    value = 1 + 0j
    if n >= 0:
        for j in range(n):
            value *= 1.0 - a * power_of(q, j)
        return value
    for j in range(1, -n + 1):
        factor = 1.0 - a * power_of(q, -j)
        if abs(factor) < VANISHING:
            raise DivisionByZero(
                "(a; q)_{} has a vanishing factor at j = {}".format(n, j))
        value /= factor
    return value
