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
"""This module is the base class of the state-integral integrands"""
from abc import abstractmethod

import numpy as np


class DefaultSpec():
    """An integrand of a one dimensional state-integral.

    Subclasses describe the per-step multiplier r(z; q) that generates
    the quasi-periodicity multipliers g_k, the total multiplier g, the
    gluing polynomial whose roots solve g(z) = 1, and the integrand
    itself on both sides of the evaluation.
    """
    name = None

    @property
    @abstractmethod
    def degree(self):
        """Degree of the gluing polynomial"""
        raise NotImplementedError

    @abstractmethod
    def step(self, z, q):
        """r(z; q) = g_1(z; q), so that g_{k+1}(x) = g_k(x) r(x q^k)
        :raises DivisionByZero: when r has a pole at z
        """
        raise NotImplementedError

    @abstractmethod
    def g(self, x):
        """Total multiplier, g(x) = g_N(x^{1/N}; q) whenever q^N = 1"""
        raise NotImplementedError

    @abstractmethod
    def log_derivative(self, x):
        """g'(x) / g(x)"""
        raise NotImplementedError

    @abstractmethod
    def g_closed(self, k, x, q):
        """g_k from its closed product form"""
        raise NotImplementedError

    @abstractmethod
    def gluing_polynomial(self):
        """numpy Polynomial vanishing exactly at the solutions of g(z) = 1"""
        raise NotImplementedError

    @abstractmethod
    def lambda_range(self, pair):
        """Open interval of admissible contour parameters"""
        raise NotImplementedError

    @abstractmethod
    def height_band(self, pair):
        """Open interval of admissible Im x for the quadrature contour"""
        raise NotImplementedError

    @abstractmethod
    def default_height(self, pair):
        raise NotImplementedError

    @abstractmethod
    def log_integrand(self, pair, xs, log_phi):
        """log of the integrand on the nodes xs
        :param log_phi: callable mapping a point array to log Phi_b
        """
        raise NotImplementedError

    @abstractmethod
    def shifted_integrand(self, pair, w, side=None):
        """The integrand at x = w + c_b through the rational closed forms"""
        raise NotImplementedError

    def g_prime(self, x):
        return self.g(x) * self.log_derivative(x)

    def z_g_prime(self, z):
        """z g'(z), the residue denominator"""
        return z * self.g_prime(z)

    def params(self):
        """Parameters as a plain dict for reports"""
        return {'spec': self.name}

    def in_band(self, pair, height):
        low, high = self.height_band(pair)
        return low < height < high

    def __eq__(self, other):
        return type(self) is type(other) and self.params() == other.params()

    def __hash__(self):
        return hash(tuple(sorted(self.params().items())))

    def __repr__(self):
        inner = ', '.join('{}={}'.format(k, v) for k, v in self.params().items()
                          if k != 'spec')
        return '{}({})'.format(type(self).__name__, inner)


def as_array(xs):
    return np.atleast_1d(np.asarray(xs, dtype=complex))
