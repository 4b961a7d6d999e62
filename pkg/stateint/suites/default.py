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
"""This module is the base class of the verification suites"""
from abc import abstractmethod

import numpy as np

from stateint.exceptions import StateIntError
from stateint.logger import Logger

LG = Logger()


class DefaultSuite():
    """A suite is a named list of checks. Each check returns the error
    it measured; a row passes when that error is below the tolerance.
    Non-gating rows are findings and never fail a run."""
    name = None
    index = 0

    def __init__(self, seed=0):
        self.seed = seed
        self.rng = np.random.default_rng([seed, self.index])

    @abstractmethod
    def checks(self):
        """Yields (check name, callable returning an error, tolerance, gating)"""
        raise NotImplementedError

    def run(self):
        """Runs every check, failures included, in a fixed order
        :returns: list of row dicts
        """
        rows = []
        for check, measure, tolerance, gating in self.checks():
            note = ''
            try:
                error = float(measure())
            except StateIntError as exc:
                LG.log(exc)
                error, note = float('inf'), type(exc).__name__
            rows.append({'suite': self.name, 'check': check, 'error': error,
                         'tolerance': tolerance, 'gating': gating,
                         'passed': bool(error < tolerance), 'note': note})
        return rows

    def random_complex(self, size, re=(-1.0, 1.0), im=(-1.0, 1.0)):
        return self.rng.uniform(*re, size) + 1j * self.rng.uniform(*im, size)


def max_error(values):
    values = list(values)
    return max(values) if values else 0.0
