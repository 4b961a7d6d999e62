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
"""Composite Gauss-Legendre quadrature along horizontal lines"""
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional

import numpy as np

from stateint.config import TOL_FLOOR, settings
from stateint.exceptions import NoConvergence, NonFinite
from stateint.logger import Logger

LG = Logger()


@dataclass(frozen=True)
class ContourConfig:
    """Line Im x = height, truncated to [-half_width, half_width].
    A height of None lets the caller pick its default."""
    height: Optional[float] = None
    half_width: float = 8.0
    panels: int = 16
    tol: float = 1e-10
    max_refinements: int = 8
    order: int = 16

    def __post_init__(self):
        if self.tol < TOL_FLOOR:
            raise ValueError("tol {} below the double precision floor {}"
                             .format(self.tol, TOL_FLOOR))
        if self.panels < 1 or self.max_refinements < 1 or self.order < 1:
            raise ValueError("panels, order and max_refinements must be positive")
        if self.half_width <= 0:
            raise ValueError("half_width must be positive")

    @classmethod
    def from_config(cls, **overrides):
        """Defaults from the 'quadrature' section, overridden by
        any non-None keyword"""
        cfg = settings('quadrature')
        values = dict(half_width=cfg.half_width, panels=cfg.panels,
                      tol=cfg.tol, max_refinements=cfg.max_refinements,
                      order=cfg.order)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_(self, **changes):
        return replace(self, **changes)


@lru_cache(maxsize=16)
def _legendre(order):
    return np.polynomial.legendre.leggauss(order)


def composite_rule(half_width, panels, order=16):
    """Nodes and weights of the composite rule on [-half_width, half_width]
    :returns: (t, w) flat arrays, panel by panel from left to right
    """
    x, w = _legendre(order)
    edges = np.linspace(-half_width, half_width, panels + 1)
    centers = 0.5 * (edges[1:] + edges[:-1])
    halves = 0.5 * (edges[1:] - edges[:-1])
    t = (centers[:, None] + halves[:, None] * x[None, :]).ravel()
    weights = (halves[:, None] * w[None, :]).ravel()
    return t, weights


def integrate_line(f, cfg, stats=None):
    """Integrates f along x = t + i cfg.height, |t| <= cfg.half_width.

    f receives the complex node array and returns values of shape
    (..., n), so several integrands can share one rule. The panel count
    doubles until successive estimates differ by less than cfg.tol.
    :param stats: optional dict, receives the final panel count
    :returns: (value, est_error) with value of shape (...) and
              est_error the last max difference
    """
    height = cfg.height or 0.0
    panels = cfg.panels
    previous = None
    for _ in range(cfg.max_refinements + 1):
        t, w = composite_rule(cfg.half_width, panels, cfg.order)
        values = np.asarray(f(t + 1j * height))
        if not np.all(np.isfinite(values)):
            raise NonFinite("integrand not finite on Im x = {}".format(height))
        estimate = np.sum(values * w, axis=-1)
        if previous is not None:
            error = float(np.max(np.abs(estimate - previous)))
            if error < cfg.tol:
                if stats is not None:
                    stats['panels'] = panels
                LG.debug('line integral converged at %d panels, error %.3e',
                         panels, error)
                return estimate, error
        previous = estimate
        panels *= 2
    raise NoConvergence("no convergence after {} refinements ({} panels)"
                        .format(cfg.max_refinements, panels // 2))
