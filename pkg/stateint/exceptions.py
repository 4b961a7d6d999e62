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

"""Errors raised by stateint.

Everything derives from StateIntError so the CLI can tell computation
failures (exit 1) from usage errors (exit 2, the ValueError subclasses).
"""


class StateIntError(Exception):
    """Base class for all stateint errors"""


class CutProximity(StateIntError):
    """Argument lies on (or within tolerance of) a principal branch cut"""


class DomainError(StateIntError):
    """Argument outside the domain of the function"""


class DivisionByZero(StateIntError):
    """A Pochhammer or multiplier factor vanishes"""


class NotCoprime(StateIntError, ValueError):
    """(M, N) is not an admissible pair"""


class InvalidSpec(StateIntError, ValueError):
    """Integrand parameters outside B > A > 0"""


class OutOfStrip(StateIntError):
    """Point outside the strip where the integral representation holds"""


class PoleProximity(StateIntError):
    """Point too close to a pole of the quantum dilogarithm"""


class NoConvergence(StateIntError):
    """Quadrature did not reach the requested tolerance"""


class NonFinite(StateIntError):
    """Integrand produced inf or nan on the contour"""


class BandViolation(StateIntError):
    """Contour height outside the admissible band"""


class NonGenericLambda(StateIntError):
    """A lift sits on the boundary of the strip selected by lambda"""


class DegenerateRoot(StateIntError):
    """Two gluing roots coincide, residues are no longer simple"""
