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
"""Verification suites, run by ``stateint verify``"""
from collections import OrderedDict

from stateint.suites.phi import PhiSuite
from stateint.suites.sums import SumsSuite
from stateint.suites.thm1 import ClosedFormSuite
from stateint.suites.thm2 import RationalSuite
from stateint.suites.pretzel import PretzelSuite
from stateint.suites.props import PropertiesSuite

SUITES = OrderedDict((suite.name, suite) for suite in (
    PhiSuite, SumsSuite, ClosedFormSuite, RationalSuite, PretzelSuite, PropertiesSuite))


def run_suites(name='all', seed=0):
    """Runs one suite, or all of them in a fixed order
    :param name: a key of SUITES or 'all'
    :param seed: seed of the random test points
    :returns: list of row dicts
    """
    if name != 'all' and name not in SUITES:
        raise ValueError("unknown suite {!r}, expected one of: all, {}"
                         .format(name, ', '.join(SUITES)))
    names = list(SUITES) if name == 'all' else [name]
    rows = []
    for key in names:
        rows.extend(SUITES[key](seed).run())
    return rows


def summary(rows):
    """(passed gating rows, gating rows, failed findings)"""
    gating = [r for r in rows if r['gating']]
    findings = [r for r in rows if not r['gating'] and not r['passed']]
    return sum(r['passed'] for r in gating), len(gating), len(findings)
