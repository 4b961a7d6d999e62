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
"""Quasi-periodicity multipliers and the finite state-sums at roots of unity.

g_k is built by the recursion g_{k+1}(x) = g_k(x) r(x q^k), run downwards
for negative k as g_{k-1}(x) = g_k(x) / r(x q^{k-1}). Sums add real and
imaginary parts separately with math.fsum.
"""
import math

from stateint.dilogs import RootOfUnity, power_of
from stateint.exceptions import DivisionByZero

SIGNS = {'+': 1, '-': -1, 1: 1, -1: -1}


def _check_sign(sign):
    if sign not in SIGNS:
        raise ValueError("sign must be '+' or '-', got {!r}".format(sign))
    return SIGNS[sign]


def _divide(value, r, x, k):
    if r == 0:
        raise DivisionByZero("g_{} has a vanishing step at x = {}".format(k, x))
    return value / r


def g_ladder(spec, x, q, low, high):
    """g_k(x, q) for every k in [low, high], as a dict keyed by k
    :param low: integer <= 0
    :param high: integer >= 0
    """
    x = complex(x)
    ladder = {0: 1 + 0j}
    value = 1 + 0j
    for k in range(high):
        value *= spec.step(x * power_of(q, k), q)
        ladder[k + 1] = value
    value = 1 + 0j
    for k in range(0, low, -1):
        value = _divide(value, spec.step(x * power_of(q, k - 1), q), x, k - 1)
        ladder[k - 1] = value
    return ladder


def g_k(spec, sign, k, x, q):
    """Quasi-periodicity multiplier g^sign_k(x, q) for any integer k
    :param sign: '+' or '-' (the formula is the same, q tells them apart)
    :raises DivisionByZero: when a step of the recursion vanishes or blows up
    """
    _check_sign(sign)
    return g_ladder(spec, x, q, min(k, 0), max(k, 0))[k]


def fsum_complex(terms):
    terms = list(terms)
    return complex(math.fsum(t.real for t in terms),
                   math.fsum(t.imag for t in terms))


def big_g_n(spec, sign, N, x):
    """G^sign_N(x) = sum_{k=0}^{N-1} g_k(x, zeta_N)"""
    _check_sign(sign)
    if N < 1:
        raise ValueError("N must be positive, got {}".format(N))
    ladder = g_ladder(spec, x, RootOfUnity(N, 1), 0, N - 1)
    return fsum_complex(ladder[k] for k in range(N))


def big_g_mn(spec, pair, x_plus, x_minus):
    """G_{M,N}(x+, x-) = sum_{k=0}^{MN-1} g+_{kP}(x+, q+) g-_{kQ}(x-, q-)
    with the Bezout pair (P, Q) stored on the AdmissiblePair
    """
    count = pair.M * pair.N
    ends_plus = (0, (count - 1) * pair.P)
    ends_minus = (0, (count - 1) * pair.Q)
    plus = g_ladder(spec, x_plus, pair.q_plus, min(ends_plus), max(ends_plus))
    minus = g_ladder(spec, x_minus, pair.q_minus, min(ends_minus), max(ends_minus))
    return fsum_complex(plus[k * pair.P] * minus[k * pair.Q]
                        for k in range(count))
