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
"""Closed forms of Phi_b at rational b^2 = M/N.

All logarithms are principal. The shifted roots e^{z/N}, e^{z/M} are
taken literally, so the branch is carried by z itself. An explicit
side picks the one-sided limit when e^z (or a cyclic factor) sits on
its cut.
"""
import cmath
import math

from stateint.dilogs import cyclic_dilog, li2, log1m, slashed_cyclic_dilog
from stateint.dilogs.roots import RootOfUnity
from stateint.faddeev.pair import AdmissiblePair


def _numerator(pair, z, side):
    s2 = pair.s ** 2
    e_z = cmath.exp(z)
    return cmath.exp(1j / (2 * math.pi * s2) * li2(e_z, side)
                     + (1 + 1j * z / (2 * math.pi * s2)) * log1m(e_z, side))


def phi_rational(pair: AdmissiblePair, z, side=None):
    """Phi_b(z / (2 pi s) - c_b) as
    exp(i Li2(e^z) / (2 pi s^2)) (1 - e^z)^(1 + i z / (2 pi s^2))
    / (D_N(e^{z/N}; q+) D_M(e^{z/M}; q-))
    :raises CutProximity: e^z near [1, inf) without a side
    :raises DomainError: e^z = 1 or a cyclic factor vanishes
    """
    z = complex(z)
    denominator = cyclic_dilog(pair.N, cmath.exp(z / pair.N), pair.q_plus, side) * \
        cyclic_dilog(pair.M, cmath.exp(z / pair.M), pair.q_minus, side)
    return _numerator(pair, z, side) / denominator


def phi_rational_shifted(pair: AdmissiblePair, z, side=None):
    """Phi_b(z / (2 pi s) + c_b), same numerator over slashed cyclic dilogarithms"""
    z = complex(z)
    denominator = \
        slashed_cyclic_dilog(pair.N, cmath.exp(z / pair.N), pair.q_plus, side) * \
        slashed_cyclic_dilog(pair.M, cmath.exp(z / pair.M), pair.q_minus, side)
    return _numerator(pair, z, side) / denominator


def phi_m1(N, x, side=None):
    """Phi_b(x - c_b) for b = 1/sqrt(N), z = exp(2 pi b x):
    exp(-Li2(z^N) / (2 pi i N)) (1 - z^N)^(1 + i x / sqrt(N)) / D_N(z; zeta_N)
    """
    x = complex(x)
    z = cmath.exp(2 * math.pi * x / math.sqrt(N))
    z_n = cmath.exp(2 * math.pi * math.sqrt(N) * x)
    numerator = cmath.exp(-li2(z_n, side) / (2j * math.pi * N)
                          + (1 + 1j * x / math.sqrt(N)) * log1m(z_n, side))
    return numerator / cyclic_dilog(N, z, RootOfUnity(N, 1), side)


def phi_unit(x, side=None):
    """Phi_1(x) = exp(i (Li2(e^{2 pi x}) + 2 pi x Log(1 - e^{2 pi x})) / (2 pi))"""
    x = complex(x)
    e = cmath.exp(2 * math.pi * x)
    return cmath.exp(1j / (2 * math.pi) * (li2(e, side)
                                           + 2 * math.pi * x * log1m(e, side)))
