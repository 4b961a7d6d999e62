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

"""This module stores all numerical constants. It is a singleton
because it is used across several modules inside the app"""
import os

from stateint.singleton import Singleton
from stateint.utils import Dotdict, parse_config

DEFAULTS_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                             'defaults.yml')

REQUIRED = {
    'dilog': ('cut_tolerance', 'side_snap', 'series_radius',
              'bernoulli_terms'),
    'faddeev': ('strip_margin', 'reduction_window', 'pole_tolerance', 'tol',
                'cutoff_exponent', 'panels_per_unit', 'max_refinements',
                'chunk_size'),
    'quadrature': ('order', 'half_width', 'panels', 'tol', 'max_refinements',
                   'max_half_width', 'growth'),
    'evaluator': ('lambda_fraction', 'genericity', 'root_separation',
                  'residual', 'newton_iterations', 'real_snap'),
    'cache': ('enabled',),
}

TOL_FLOOR = 1e-13


class Config(metaclass=Singleton):
    """This class contains all numerical constants, loaded from the
    packaged defaults on first use"""
    ct = {}

    def __init__(self):
        self.configure(**parse_config(DEFAULTS_PATH))

    def configure(self, **kwargs):
        """Stores configuration constants, parsed
        from yaml config file
        :param kwargs: sections and their values
        """
        self.ct = Dotdict({name: Dotdict(values)
                           for name, values in kwargs.items()})

    def update(self, section, **values):
        """Overrides single values of a section
        :param section: section name, e.g. 'quadrature'
        :param values: keys and new values
        """
        self.ct[section].update(values)
        self.check_config()

    def check_config(self):
        """Checks if the config properties are set and
        raises ValueError if any value misses"""
        for section, keys in REQUIRED.items():
            if self.ct.get(section) is None:
                raise ValueError(
                    "Missing configuration section: {}".format(section))
            missing = [k for k in keys if self.ct[section].get(k) is None]
            if missing:
                raise ValueError("Section {} misses: {}".format(
                    section, ', '.join(missing)))
        if self.ct.quadrature.tol < TOL_FLOOR:
            raise ValueError("quadrature.tol below {}".format(TOL_FLOOR))


def settings(section):
    """Shortcut for one section of the current configuration
    :param section: section name
    :returns: Dotdict
    """
    return Config().ct[section]
