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
"""Quasi-periodic continuation of Phi_b out of its strip.

Phi(y + i p) = Phi(y) / (1 + exp(pi i p^2 + 2 pi p y)) for p = b and p = 1/b.
Points are moved into |Im y| <= window * Im c_b by i/b steps first,
with i b steps only where an i/b step would overshoot the window.
"""
import cmath
import math

from stateint.config import settings
from stateint.exceptions import PoleProximity
from stateint.faddeev.strip import im_c_b, phi_strip, real_b
from stateint.logger import Logger

LG = Logger()


def _factor(period, lower):
    """Phi(lower) / Phi(lower + i period)"""
    return 1.0 + cmath.exp(1j * math.pi * period * period
                           + 2.0 * math.pi * period * lower)


def _next_period(b, height, window):
    if height - 1.0 / b >= -window:
        return 1.0 / b
    return b


def reduction_path(pair_or_b, x):
    """Moves x into the reduction window.
    :returns: (y, steps) with y the reduced point and steps the signed
              shifts taken, -p for y -> y - i p and +p for y -> y + i p
    """
    b = real_b(pair_or_b)
    window = settings('faddeev').reduction_window * im_c_b(b)
    y = complex(x)
    steps = []
    while y.imag > window:
        period = _next_period(b, y.imag, window)
        steps.append(-period)
        y -= 1j * period
    while y.imag < -window:
        period = _next_period(b, -y.imag, window)
        steps.append(period)
        y += 1j * period
    return y, steps


def phi(pair_or_b, x):
    """Phi_b(x) anywhere off the pole lattice c_b + i(m b + n/b), m, n >= 0
    :raises PoleProximity: when a dividing shift factor vanishes
    """
    b = real_b(pair_or_b)
    tolerance = settings('faddeev').pole_tolerance
    y, steps = reduction_path(b, x)
    value = phi_strip(b, y)
    for step in reversed(steps):
        if step < 0:
            factor = _factor(-step, y)
            if abs(factor) < tolerance:
                raise PoleProximity(
                    "{} is a pole of Phi_b, b = {:.6g}".format(x, b))
            value /= factor
            y -= 1j * step
        else:
            y -= 1j * step
            value *= _factor(step, y)
    if steps:
        LG.debug('phi(%s) continued through %d shifts', x, len(steps))
    return value


def phi_poles(pair_or_b, count):
    """Poles c_b + i(m b + n/b) with m + n < count, by increasing height"""
    b = real_b(pair_or_b)
    c_b = 1j * im_c_b(b)
    points = [c_b + 1j * (m * b + n / b)
              for m in range(count) for n in range(count - m)]
    return sorted(points, key=lambda p: (p.imag, p.real))


def phi_zeros(pair_or_b, count):
    """Zeros -c_b - i(m b + n/b) with m + n < count"""
    return [-p for p in phi_poles(pair_or_b, count)]
