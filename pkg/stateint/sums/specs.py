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
"""The two integrand families: Phi_b(x)^B e^{-A pi i x^2} and the
pretzel integrand Phi_b(x)^2 Phi_b(2x - c_b) e^{-2 pi i x^2}"""
import cmath
import math

from numpy.polynomial import Polynomial

from stateint.config import settings
from stateint.dilogs import pochhammer, power_of
from stateint.exceptions import DivisionByZero, InvalidSpec
from stateint.faddeev.rational import phi_rational_shifted
from stateint.sums.default import DefaultSpec, as_array

VANISHING = 1e-14


def _check_denominator(value, z):
    if abs(value) < VANISHING:
        raise DivisionByZero("multiplier has a pole at z = {}".format(z))
    return value


def _strip_fraction():
    return 1.0 - settings('faddeev').strip_margin


class ABSpec(DefaultSpec):
    """g(x) = (-x)^A (1 - x)^(-B) for integers B > A > 0"""
    name = 'ab'

    def __init__(self, A, B):
        if not (isinstance(A, int) and isinstance(B, int)) or not B > A > 0:
            raise InvalidSpec(
                "requires integers B > A > 0, got A = {}, B = {}".format(A, B))
        self.A = A
        self.B = B

    @property
    def degree(self):
        return self.B

    def step(self, z, q):
        qz = power_of(q, 1) * z
        return (-qz) ** self.A / _check_denominator(1.0 - qz, z) ** self.B

    def g(self, x):
        return (-x) ** self.A / _check_denominator(1.0 - x, x) ** self.B

    def log_derivative(self, x):
        return self.A / x + self.B / (1.0 - x)

    def g_closed(self, k, x, q):
        return (-x) ** (self.A * k) * power_of(q, self.A * k * (k + 1) // 2) / \
            pochhammer(power_of(q, 1) * x, q, k) ** self.B

    def gluing_polynomial(self):
        return Polynomial([0] * self.A + [(-1) ** self.A]) - \
            Polynomial([1, -1]) ** self.B

    def lambda_range(self, pair):
        return -(pair.M + pair.N) / 2, 0.0

    def height_band(self, pair):
        return 0.0, _strip_fraction() * pair.c_b.imag

    def default_height(self, pair):
        return pair.c_b.imag / 2

    def log_integrand(self, pair, xs, log_phi):
        xs = as_array(xs)
        return self.B * log_phi(xs) - self.A * math.pi * 1j * xs * xs

    def shifted_integrand(self, pair, w, side=None):
        x = w + pair.c_b
        return phi_rational_shifted(pair, 2 * math.pi * pair.s * w, side) ** self.B * \
            cmath.exp(-self.A * math.pi * 1j * x * x)

    def params(self):
        return {'spec': self.name, 'A': self.A, 'B': self.B}


class PretzelSpec(DefaultSpec):
    """g(x) = x^2 / ((1 - x)^2 (1 - x^2)^2)"""
    name = 'pretzel'

    @property
    def degree(self):
        return 6

    def step(self, z, q):
        q1, q2 = power_of(q, 1), power_of(q, 2)
        denominator = (1.0 - q1 * z) ** 2 * (1.0 - q1 * z * z) * (1.0 - q2 * z * z)
        return q2 * z * z / _check_denominator(denominator, z)

    def g(self, x):
        return x * x / _check_denominator((1.0 - x) ** 2 * (1.0 - x * x) ** 2, x)

    def log_derivative(self, x):
        return 2.0 / x + 2.0 / (1.0 - x) + 4.0 * x / (1.0 - x * x)

    def g_closed(self, k, x, q):
        return power_of(q, k * (k + 1)) * x ** (2 * k) / (
            pochhammer(power_of(q, 1) * x, q, k) ** 2 *
            pochhammer(power_of(q, 1) * x * x, q, 2 * k))

    def gluing_polynomial(self):
        one_minus = Polynomial([1, -1])
        return Polynomial([0, 0, 1]) - one_minus ** 2 * Polynomial([1, 0, -1]) ** 2

    def lambda_range(self, pair):
        return -(pair.M + pair.N) / 4, 0.0

    def height_band(self, pair):
        # Phi_b(2x - c_b) must stay inside the strip as well
        return pair.c_b.imag / 2, _strip_fraction() * pair.c_b.imag

    def default_height(self, pair):
        return 3 * pair.c_b.imag / 4

    def log_integrand(self, pair, xs, log_phi):
        xs = as_array(xs)
        return 2 * log_phi(xs) + log_phi(2 * xs - pair.c_b) - \
            2j * math.pi * xs * xs

    def shifted_integrand(self, pair, w, side=None):
        x = w + pair.c_b
        t = 2 * math.pi * pair.s * w
        return phi_rational_shifted(pair, t, side) ** 2 * \
            phi_rational_shifted(pair, 2 * t, side) * \
            cmath.exp(-2j * math.pi * x * x)


def make_spec(A=None, B=None, pretzel=False):
    """Builds the integrand from CLI style parameters"""
    if pretzel:
        return PretzelSpec()
    if A is None or B is None:
        raise InvalidSpec("A and B are required unless the pretzel integrand is chosen")
    return ABSpec(A, B)
