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
"""End-to-end checks of the pretzel integrand"""
from stateint.evaluators import (evaluate_residue_sum, gluing_roots,
                                 pretzel_torsion, split_pretzel_roots)
from stateint.evaluators.pretzel import matches_quoted_triple
from stateint.faddeev import AdmissiblePair
from stateint.quadrature.contour import ContourConfig
from stateint.quadrature.state_integral import state_integral_numeric
from stateint.sums import PretzelSpec
from stateint.suites.default import DefaultSuite, max_error


class PretzelSuite(DefaultSuite):
    name = 'pretzel'
    index = 4

    def __init__(self, seed=0):
        super().__init__(seed)
        self.spec = PretzelSpec()
        self.pair = AdmissiblePair(1, 1)

    def root_count(self):
        return abs(len(gluing_roots(self.spec)) - 6)

    def cubic_split(self):
        split = split_pretzel_roots()
        return abs(len(split['plus']) - 3) + abs(len(split['minus']) - 3) + \
            abs(split['real_plus'] - 3) + abs(split['real_minus'] - 1)

    def agreement(self):
        return abs(evaluate_residue_sum(self.spec, self.pair).value -
                   state_integral_numeric(self.spec, self.pair).value)

    def height_stability(self):
        low, high = self.spec.height_band(self.pair)
        values = [state_integral_numeric(
            self.spec, self.pair,
            ContourConfig.from_config(height=low + (high - low) * f)).value
            for f in (0.3, 0.7)]
        return abs(values[0] - values[1])

    @staticmethod
    def torsion():
        rows = pretzel_torsion()
        return max_error(max(r['modulus_error'], r['order_error']) for r in rows) \
            if len(rows) == 3 else float('inf')

    @staticmethod
    def quoted_triple():
        return 0.0 if matches_quoted_triple(pretzel_torsion()) else 1.0

    def checks(self):
        yield 'six gluing roots', self.root_count, 0.5, True
        yield 'two cubics', self.cubic_split, 0.5, True
        yield 'residue vs quadrature (1,1)', self.agreement, 1e-7, True
        yield 'height stability (1,1)', self.height_stability, 1e-8, True
        yield 'torsion of order 42', self.torsion, 1e-8, True
        yield 'quoted torsion triple', self.quoted_triple, 0.5, False
