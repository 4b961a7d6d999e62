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
"""Numerical evaluation of a state-integral along a horizontal line"""
import numpy as np

from stateint.config import settings
from stateint.evaluators.report import EvaluationReport, Method
from stateint.exceptions import BandViolation, NoConvergence
from stateint.logger import Logger
from stateint.quadrature.contour import ContourConfig, integrate_line
from stateint.quadrature.phi_cache import PhiCache

LG = Logger()


def _integrand(spec, pair):
    cache = PhiCache()

    def log_phi(xs):
        return cache.log_phi(pair, xs)

    def integrand(xs):
        return np.exp(spec.log_integrand(pair, xs, log_phi))
    return integrand


def truncation(integrand, cfg):
    """Smallest half-width (from cfg.half_width, grown geometrically)
    where the integrand at both ends is below tol / (100 T)
    :raises NoConvergence: past the configured maximum half-width
    """
    qcfg = settings('quadrature')
    half_width = cfg.half_width
    while True:
        ends = np.array([-half_width, half_width]) + 1j * cfg.height
        edge = float(np.max(np.abs(integrand(ends))))
        if edge < cfg.tol / (100 * half_width):
            return half_width
        if half_width * qcfg.growth > qcfg.max_half_width:
            raise NoConvergence(
                "integrand still {:.3e} at |Re x| = {:.4g}".format(edge, half_width))
        half_width *= qcfg.growth
        LG.info('truncation grown to %.4g', half_width)


def resolve_contour(spec, pair, cfg=None):
    """Fills in the default height and checks it against the band
    :raises BandViolation: height outside the admissible band
    """
    cfg = cfg or ContourConfig.from_config()
    height = spec.default_height(pair) if cfg.height is None else cfg.height
    if not spec.in_band(pair, height):
        low, high = spec.height_band(pair)
        raise BandViolation("height {} outside ({:.6g}, {:.6g}) for {}"
                            .format(height, low, high, spec))
    return cfg.with_(height=height)


def state_integral_numeric(spec, pair, cfg=None):
    """Integrates the integrand of spec along Im x = cfg.height.

    The AB integrand is Phi_b(x)^B exp(-A pi i x^2), the pretzel one
    Phi_b(x)^2 Phi_b(2x - c_b) exp(-2 pi i x^2). The truncation is
    chosen adaptively before the panel refinement starts.
    :param spec: ABSpec or PretzelSpec
    :param pair: AdmissiblePair
    :param cfg: ContourConfig, None for the packaged defaults
    :returns: EvaluationReport with method quadrature
    """
    try:
        cfg = resolve_contour(spec, pair, cfg)
        integrand = _integrand(spec, pair)
        cfg = cfg.with_(half_width=truncation(integrand, cfg))
        stats = {}
        value, error = integrate_line(integrand, cfg, stats)
        LG.info('quadrature of %s at (%d, %d): %s +- %.2e',
                spec, pair.M, pair.N, complex(value), error)
        return EvaluationReport(
            value=complex(value), method=Method.QUADRATURE,
            params=dict(spec.params(), M=pair.M, N=pair.N),
            diagnostics={'est_error': error, 'contour_height': cfg.height,
                         'truncation': cfg.half_width, 'panels': stats['panels'],
                         'order': cfg.order})
    except Exception as exc:
        LG.log_and_raise(exc)
