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
"""Structure of the pretzel gluing roots.

The six roots split by the sign of z / ((1 - z^2)(1 - z)) = +-1 into
z^3 - z^2 - 2z + 1 = 0 (three real roots) and z^3 - z^2 + 1 = 0 (one
real root). The real roots of the first cubic carry 42-torsion
u = e((2 L(z) + L(z^2)) / pi^2 - 1/2), L the real Rogers dilogarithm.
"""
import cmath
import math

from stateint.dilogs import rogers_real
from stateint.evaluators.gluing import gluing_roots
from stateint.sums import PretzelSpec

QUOTED_TORSION = (-19, -13, 11)


def cubic_sign(z):
    """+1 or -1, the value of z / ((1 - z^2)(1 - z)) at a gluing root"""
    return 1 if (z / ((1 - z * z) * (1 - z))).real > 0 else -1


def split_pretzel_roots(roots=None):
    """Splits the pretzel roots between the two cubics
    :returns: dict with keys 'plus' and 'minus' (lists of roots) and
              'real_plus', 'real_minus' (counts of real roots)
    """
    roots = gluing_roots(PretzelSpec()) if roots is None else roots
    split = {'plus': [], 'minus': []}
    for z in roots:
        split['plus' if cubic_sign(z) > 0 else 'minus'].append(z)
    split['real_plus'] = sum(1 for z in split['plus'] if z.imag == 0)
    split['real_minus'] = sum(1 for z in split['minus'] if z.imag == 0)
    return split


def e(x):
    return cmath.exp(2j * math.pi * x)


def torsion(z):
    """u = e((2 L(z) + L(z^2)) / pi^2 - 1/2) for a real root z"""
    x = z.real
    return e((2 * rogers_real(x) + rogers_real(x * x)) / math.pi ** 2 - 0.5)


def pretzel_torsion(roots=None):
    """Torsion data of the real roots of the totally real cubic
    :returns: list of dicts with z, u, |u| - 1 and |u^42 - 1|
    """
    split = split_pretzel_roots(roots)
    rows = []
    for z in split['plus']:
        if z.imag != 0:
            continue
        u = torsion(z)
        rows.append({'z': z, 'u': u, 'modulus_error': abs(abs(u) - 1),
                     'order_error': abs(u ** 42 - 1),
                     'index': round(cmath.phase(u) / (2 * math.pi) * 42)})
    return rows


def matches_quoted_triple(rows, tol=1e-8):
    """True when the torsion values equal e(k/42), k in QUOTED_TORSION,
    up to one common sign"""
    values = sorted((r['u'] for r in rows), key=cmath.phase)
    for sign in (1, -1):
        quoted = sorted((sign * e(k / 42) for k in QUOTED_TORSION), key=cmath.phase)
        if len(values) == len(quoted) and \
                all(abs(a - b) < tol for a, b in zip(values, quoted)):
            return True
    return False
