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
"""Faddeev's quantum dilogarithm inside its strip of definition.

log Phi_b(x) = int_{R + i eps} exp(-2 i x z) / (4 sinh(z b) sinh(z / b)) dz / z
for |Im x| < Im c_b. The contour sits at eps = (pi/2) min(b, 1/b), halfway
between the singularity at 0 and the first poles on the imaginary axis.
"""
import cmath
import math

import numpy as np

from stateint.config import settings
from stateint.exceptions import OutOfStrip
from stateint.quadrature.contour import ContourConfig, integrate_line


def real_b(pair_or_b):
    """b of an AdmissiblePair, or a plain positive real b"""
    b = getattr(pair_or_b, 'b', pair_or_b)
    b = float(b)
    if not b > 0:
        raise ValueError("b must be a positive real, got {}".format(b))
    return b


def im_c_b(b):
    return 0.5 * (b + 1.0 / b)


def log_phi_zero(pair_or_b):
    b = real_b(pair_or_b)
    return 1j * math.pi * (b * b + 1.0 / (b * b)) / 24


def phi_zero(pair_or_b):
    """Phi_b(0) = exp(pi i (b^2 + b^-2) / 24)"""
    return cmath.exp(log_phi_zero(pair_or_b))


def contour_height(b):
    return 0.5 * math.pi * min(b, 1.0 / b)


def _check_strip(b, xs):
    bound = im_c_b(b) * (1.0 - settings('faddeev').strip_margin)
    worst = float(np.max(np.abs(xs.imag))) if xs.size else 0.0
    if worst >= bound:
        raise OutOfStrip("|Im x| = {:.6g} outside the strip |Im x| < {:.6g}"
                         .format(worst, bound))


def _log_sinh(w):
    """A logarithm of sinh(w) that neither overflows nor underflows"""
    right = w.real >= 0
    v = np.where(right, w, -w)
    return v + np.log1p(-np.exp(-2 * v)) - math.log(2) + np.where(right, 0, 1j * math.pi)


def _log_kernel(b):
    """z -> log(4 sinh(z b) sinh(z / b) z), up to multiples of 2 pi i"""
    def log_kernel(z):
        return math.log(4.0) + _log_sinh(z * b) + _log_sinh(z / b) + np.log(z)
    return log_kernel


def _integrate(b, xs):
    """Direct contour integral for a batch sharing one quadrature rule"""
    cfg = settings('faddeev')
    eps = contour_height(b)
    growth = 2.0 * max(float(np.max(xs.real)), 0.0) * eps
    rate = (b + 1.0 / b) - 2.0 * float(np.max(np.abs(xs.imag)))
    half_width = max(4.0, (cfg.cutoff_exponent + growth) / rate)
    # exp(-2 i x z) turns by 2 Re x radians per unit length
    density = cfg.panels_per_unit * max(1.0, 0.5 * float(np.max(np.abs(xs.real))))
    contour = ContourConfig(
        height=eps, half_width=half_width,
        panels=max(1, math.ceil(2 * half_width * density)),
        tol=cfg.tol * math.exp(growth), max_refinements=cfg.max_refinements,
        order=settings('quadrature').order)
    log_kernel = _log_kernel(b)

    def integrand(z):
        return np.exp(-2j * np.outer(xs, z) - log_kernel(z)[None, :])

    value, _ = integrate_line(integrand, contour)
    return value


def _batched(b, xs, evaluate):
    size = settings('faddeev').chunk_size
    out = np.empty(xs.shape, dtype=complex)
    for start in range(0, xs.size, size):
        out[start:start + size] = evaluate(b, xs[start:start + size])
    return out


def log_phi_integral(pair_or_b, xs):
    """log Phi_b by direct integration at every point, no symmetry used
    :param xs: complex array inside the strip
    """
    b = real_b(pair_or_b)
    xs = np.atleast_1d(np.asarray(xs, dtype=complex))
    _check_strip(b, xs)
    return _batched(b, xs, _integrate)


def log_phi_strip(pair_or_b, xs):
    """log Phi_b on an array of strip points.

    Points with Re x > 0 are integrated at -x and mapped back with
    Phi(x) Phi(-x) = exp(pi i x^2) Phi(0)^2, which keeps exp(-2 i x z)
    bounded on the contour.
    """
    b = real_b(pair_or_b)
    xs = np.atleast_1d(np.asarray(xs, dtype=complex))
    _check_strip(b, xs)
    flip = xs.real > 0
    mirrored = _batched(b, np.where(flip, -xs, xs), _integrate)
    return np.where(flip,
                    1j * math.pi * xs * xs + 2 * log_phi_zero(b) - mirrored,
                    mirrored)


def phi_strip(pair_or_b, x):
    """Phi_b(x) for |Im x| < (1 - margin) Im c_b
    :raises OutOfStrip: outside that strip
    """
    return complex(np.exp(log_phi_strip(pair_or_b, [x])[0]))
