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
"""Euler and Rogers dilogarithms.

All cuts are principal: (-inf, 0] for Log and [1, inf) for Li2.
Arguments too close to a cut raise CutProximity unless the caller
names a side, in which case the one-sided limit is returned
(side=+1 is the limit from the upper half plane).
"""
import cmath
import math
from functools import lru_cache

import mpmath
import numpy as np

from stateint.config import settings
from stateint.exceptions import CutProximity, DomainError

PI2_6 = math.pi ** 2 / 6


@lru_cache(maxsize=None)
def _bernoulli_coefficients(terms):
    """B_2k / (2k+1)! for k = 0..terms, lowest order first; the k = 0
    slot is zero because u - u^2/4 is added separately"""
    coeffs = [0.0]
    for k in range(1, terms + 1):
        coeffs.append(float(mpmath.bernoulli(2 * k) / mpmath.factorial(2 * k + 1)))
    return np.array(coeffs)


def _cut_distance(z):
    """Distance from z to the ray [1, inf)"""
    if z.real >= 1.0:
        return abs(z.imag)
    return abs(z - 1.0)


def _on_cut(z, side):
    """True when z must be treated as lying on [1, inf).
    Raises CutProximity when it does and no side was chosen."""
    cfg = settings('dilog')
    if side is not None:
        if z.real > 1.0 and abs(z.imag) <= cfg.side_snap * max(1.0, abs(z)):
            return True
        if _cut_distance(z) > cfg.cut_tolerance:
            return False
    elif _cut_distance(z) > cfg.cut_tolerance:
        return False
    raise CutProximity("{} is on the branch cut [1, inf)".format(z))


def _check_side(side):
    if side not in (None, 1, -1):
        raise ValueError("side must be +1, -1 or None, got {}".format(side))


def log1m(z, side=None):
    """Principal Log(1 - z)
    :param z: complex argument, z != 1
    :param side: +1/-1 to take the limit from above/below on the cut
    """
    _check_side(side)
    z = complex(z)
    if abs(1.0 - z) == 0.0:
        raise DomainError("Log(1 - z) at z = 1")
    if z.real > 1.0 and _on_cut(z, side):
        # 1 - (x + i0) = (1 - x) - i0
        return complex(math.log(z.real - 1.0), -side * math.pi)
    return cmath.log(1.0 - z)


def _series(z):
    total = 0j
    term = z
    n = 1
    while True:
        contribution = term / (n * n)
        total += contribution
        if abs(contribution) <= 1e-17 * abs(total) or n > 200:
            return total
        n += 1
        term *= z


def _bernoulli_series(z):
    u = -cmath.log(1.0 - z)
    coeffs = _bernoulli_coefficients(settings('dilog').bernoulli_terms)
    return u - u * u / 4 + u * complex(np.polynomial.polynomial.polyval(u * u, coeffs))


def _li2(z):
    if z == 0:
        return 0j
    if abs(z) <= settings('dilog').series_radius:
        return _series(z)
    if abs(z) > 1.0:
        # inversion
        return -PI2_6 - 0.5 * cmath.log(-z) ** 2 - _li2(1.0 / z)
    if z.real > 0.5:
        # reflection, maps into |z| < 1 with Re z < 1/2
        return PI2_6 - cmath.log(z) * cmath.log(1.0 - z) - _li2(1.0 - z)
    return _bernoulli_series(z)


def _li2_real_above_one(x):
    """Re Li2(x) for real x > 1"""
    return 2 * PI2_6 - 0.5 * math.log(x) ** 2 - _li2(complex(1.0 / x)).real


def li2(z, side=None):
    """Principal branch of the Euler dilogarithm.

    Points within the cut tolerance of [1, inf) raise CutProximity
    unless a side is given. The branch point z = 1 itself is the
    exception: Li2 is continuous there, so every z within the cut
    tolerance of 1 returns pi^2/6.
    :param z: complex argument
    :param side: +1/-1 picks the limit from above/below on [1, inf)
    :returns: complex
    """
    _check_side(side)
    z = complex(z)
    if abs(z - 1.0) <= settings('dilog').cut_tolerance:
        return complex(PI2_6)
    if z.real > 1.0 and _on_cut(z, side):
        x = z.real
        return complex(_li2_real_above_one(x), side * math.pi * math.log(x))
    if _cut_distance(z) <= settings('dilog').cut_tolerance:
        raise CutProximity("{} is on the branch cut [1, inf)".format(z))
    return _li2(z)


def rogers(z, log_z, side=None):
    """Rogers dilogarithm R(z) = Li2(z) + log(z) Log(1-z) / 2 - pi^2/6
    with the branch of log z supplied by the caller
    :param z: complex, not 0 or 1
    :param log_z: BranchedLog with base z
    :param side: forwarded to li2 / log1m for z on [1, inf)
    """
    z = complex(z)
    if z == 0 or abs(z - 1.0) <= settings('dilog').cut_tolerance:
        raise DomainError("Rogers dilogarithm undefined at {}".format(z))
    if abs(log_z.base - z) > 1e-12 * abs(z):
        raise DomainError("log branch given for {}, not {}".format(log_z.base, z))
    return li2(z, side) + 0.5 * log_z.value * log1m(z, side) - PI2_6


def rogers_real(x):
    """Real Rogers dilogarithm L on the whole real line, normalized
    by L(0) = 0, L(1) = pi^2/6 and extended through
    L(x) = -L(x/(x-1)) for x < 0 and L(x) = pi^2/3 - L(1/x) for x > 1.
    The extension is well defined modulo pi^2/2.
    """
    x = float(x)
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return PI2_6
    if x < 0.0:
        return -rogers_real(x / (x - 1.0))
    if x > 1.0:
        return 2 * PI2_6 - rogers_real(1.0 / x)
    return _li2(complex(x)).real + 0.5 * math.log(x) * math.log1p(-x)
