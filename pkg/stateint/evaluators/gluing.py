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
"""Solutions of the gluing equation g(z) = 1 and their lifts to the strip set"""
import cmath
import itertools
import math

from stateint.config import settings
from stateint.dilogs import BranchedLog
from stateint.evaluators.report import StripPoint
from stateint.exceptions import DegenerateRoot, NoConvergence, NonGenericLambda
from stateint.logger import Logger

LG = Logger()


def _polish(poly, z):
    """Newton iterations on the gluing polynomial"""
    cfg = settings('evaluator')
    derivative = poly.deriv()
    for _ in range(cfg.newton_iterations):
        slope = derivative(z)
        if slope == 0:
            break
        step = poly(z) / slope
        z = z - step
        if abs(step) <= 1e-16 * max(1.0, abs(z)):
            break
    return complex(z)


def _snap_real(z):
    if abs(z.imag) < settings('evaluator').real_snap * max(1.0, abs(z)):
        return complex(z.real, 0.0)
    return z


def gluing_roots(spec):
    """All solutions of g(z) = 1, from the companion matrix of the
    gluing polynomial and polished by Newton's method.
    Real roots come back with an exact +0.0 imaginary part.
    :returns: list sorted by (real part, imaginary part)
    :raises DegenerateRoot: when two roots are closer than root_separation
    """
    cfg = settings('evaluator')
    poly = spec.gluing_polynomial()
    roots = [_snap_real(_polish(poly, complex(r))) for r in poly.roots()]
    roots = [z for z in roots if abs(z) > 1e-12 and abs(z - 1.0) > 1e-12]
    for a, b in itertools.combinations(roots, 2):
        if abs(a - b) < cfg.root_separation:
            raise DegenerateRoot("roots {} and {} coincide".format(a, b))
    for z in roots:
        residual = abs(spec.g(z) - 1.0)
        if residual > 1e-10:
            raise NoConvergence("root {} leaves |g(z) - 1| = {:.3e}".format(z, residual))
    return sorted(roots, key=lambda z: (z.real, z.imag))


def lift(pair, z, k):
    """The lift w of z on the k-th sheet of the logarithm"""
    log_z = BranchedLog(complex(math.log(abs(z)),
                                cmath.phase(z) + 2 * math.pi * k), z)
    w = log_z.value / (2 * math.pi * pair.s)
    return StripPoint(w=w, z=z,
                      theta_plus=cmath.exp(2 * math.pi * pair.b * w),
                      theta_minus=cmath.exp(2 * math.pi * w / pair.b),
                      log_z=log_z, sheet=k)


def strip_offset(pair, point, lam):
    """s Im(w) - lambda, in (0, 1) for members of the strip set"""
    return pair.s * point.w.imag - lam


def check_lambda(spec, pair, lam):
    low, high = spec.lambda_range(pair)
    if not low < lam < high:
        raise ValueError("lambda = {} outside ({}, {})".format(lam, low, high))


def strip_set(spec, pair, lam, roots=None):
    """One StripPoint per gluing root, the lift with 0 < s Im(w) - lambda < 1
    :raises NonGenericLambda: when a lift lies within the genericity gap
                              of the strip boundary
    """
    check_lambda(spec, pair, lam)
    gap = settings('evaluator').genericity
    points = []
    for z in (gluing_roots(spec) if roots is None else roots):
        turns = cmath.phase(z) / (2 * math.pi)
        k = math.floor(lam - turns) + 1
        offset = turns + k - lam
        if offset < gap or offset > 1.0 - gap:
            raise NonGenericLambda(
                "lambda = {} puts the lift of {} on the strip boundary".format(lam, z))
        points.append(lift(pair, z, k))
    return points


def scan_lifts(spec, pair, lam, k_range=range(-10, 11)):
    """Brute-force strip set: every lift over k_range inside the strip"""
    check_lambda(spec, pair, lam)
    points = []
    for z in gluing_roots(spec):
        for k in k_range:
            point = lift(pair, z, k)
            if 0 < strip_offset(pair, point, lam) < 1:
                points.append(point)
    return points


def _primes():
    for n in itertools.count(2):
        if all(n % p for p in range(2, math.isqrt(n) + 1)):
            yield n


def default_lambda(spec, pair):
    low, high = spec.lambda_range(pair)
    return -settings('evaluator').lambda_fraction * (high - low)


def resolve_strip_set(spec, pair, lam=None, retries=8):
    """Strip set for lam, or for the default lambda near zero.
    A non-generic default is divided by 2, 3, 5, ... until generic.
    :returns: (lambda, points)
    """
    if lam is not None:
        return lam, strip_set(spec, pair, lam)
    base = default_lambda(spec, pair)
    roots = gluing_roots(spec)
    candidates = itertools.chain([1], itertools.islice(_primes(), retries))
    for divisor in candidates:
        lam = base / divisor
        try:
            return lam, strip_set(spec, pair, lam, roots)
        except NonGenericLambda as exc:
            LG.info('retrying: %s', exc)
    raise NonGenericLambda("no generic lambda found near {}".format(base))
