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
"""This module is the base class of the evaluators"""
from abc import abstractmethod

from stateint.logger import Logger

LG = Logger()


class DefaultEvaluator():
    """An evaluator turns (spec, pair, lambda) into an EvaluationReport.
    Subclasses set ``method`` and implement ``_evaluate``; ``evaluate``
    logs and re-raises whatever goes wrong."""
    method = None

    def __init__(self, *args, **kwargs):
        self.options = kwargs

    def evaluate(self, spec, pair, lam=None):
        """Evaluates the state-integral of spec at b^2 = M/N
        :param spec: ABSpec or PretzelSpec
        :param pair: AdmissiblePair
        :param lam: contour parameter, None for the default near zero
        :returns: EvaluationReport
        """
        try:
            report = self._evaluate(spec, pair, lam)
            LG.info('%s of %s at (%d, %d): %s', self.method.value, spec,
                    pair.M, pair.N, report.value)
            return report
        except Exception as exc:
            LG.log_and_raise(exc)

    @abstractmethod
    def _evaluate(self, spec, pair, lam):
        raise NotImplementedError
