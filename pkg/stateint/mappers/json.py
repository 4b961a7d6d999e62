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
"""This module maps evaluation reports to JSON and back.
Every float is written with 17 significant digits."""
import json
import math

from stateint.dilogs import BranchedLog
from stateint.evaluators.report import EvaluationReport, Method, StripPoint
from stateint.mappers.default import DefaultMapper
from stateint.utils import fmt17


def _complex(value):
    return {'re': value.real, 'im': value.imag}


def _float(value):
    if math.isnan(value):
        return 'NaN'
    if math.isinf(value):
        return 'Infinity' if value > 0 else '-Infinity'
    return fmt17(value)


def _plain(obj):
    """Replaces complex numbers by {"re", "im"} dicts, recursively"""
    if isinstance(obj, complex):
        return _complex(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def _restore(obj):
    """Inverse of _plain"""
    if isinstance(obj, dict):
        if set(obj) == {'re', 'im'}:
            return complex(obj['re'], obj['im'])
        return {k: _restore(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_restore(v) for v in obj]
    return obj


class JSONMapper(DefaultMapper):
    """EvaluationReport <-> dict with the fixed top-level schema
    value / method / params / strip_points / diagnostics"""

    def map(self, objects):
        """Maps a report to a JSON ready dict
        :param objects: EvaluationReport
        """
        report = objects
        diagnostics = dict(report.diagnostics)
        if report.lam is not None:
            diagnostics['lambda'] = report.lam
        return _plain({
            'value': report.value,
            'method': report.method.value,
            'params': report.params,
            'strip_points': [self.map_point(p) for p in report.strip_points],
            'diagnostics': diagnostics})

    @staticmethod
    def map_point(point):
        return _plain({'w': point.w, 'z': point.z,
                       'log_z_im_over_pi': point.log_z_im_over_pi,
                       'log_z': point.log_z.value,
                       'theta_plus': point.theta_plus,
                       'theta_minus': point.theta_minus,
                       'sheet': point.sheet})

    def dumps(self, obj):
        """Serializes mapped output (dicts, lists, numbers, strings)"""
        return self._encode(_plain(obj))

    def _encode(self, obj):
        if isinstance(obj, bool) or obj is None:
            return json.dumps(obj)
        if isinstance(obj, float):
            return _float(obj)
        if isinstance(obj, int):
            return str(obj)
        if isinstance(obj, str):
            return json.dumps(obj)
        if isinstance(obj, dict):
            return '{' + ', '.join('{}: {}'.format(json.dumps(k), self._encode(v))
                                   for k, v in obj.items()) + '}'
        if isinstance(obj, (list, tuple)):
            return '[' + ', '.join(self._encode(v) for v in obj) + ']'
        if hasattr(obj, 'item'):
            # numpy scalars
            return self._encode(obj.item())
        raise TypeError("cannot serialize {!r}".format(obj))

    def load(self, data):
        """Rebuilds an EvaluationReport from its mapped dict (or JSON text)"""
        if isinstance(data, str):
            data = json.loads(data)
        diagnostics = _restore(data['diagnostics'])
        points = [StripPoint(w=complex(p['w']['re'], p['w']['im']),
                             z=complex(p['z']['re'], p['z']['im']),
                             theta_plus=complex(p['theta_plus']['re'], p['theta_plus']['im']),
                             theta_minus=complex(p['theta_minus']['re'], p['theta_minus']['im']),
                             log_z=BranchedLog(complex(p['log_z']['re'], p['log_z']['im']),
                                               complex(p['z']['re'], p['z']['im'])),
                             sheet=p['sheet'])
                  for p in data['strip_points']]
        return EvaluationReport(
            value=complex(data['value']['re'], data['value']['im']),
            method=Method(data['method']), strip_points=points,
            lam=diagnostics.get('lambda'), params=_restore(data['params']),
            diagnostics=diagnostics)
