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
import os

import pytest

from stateint.config import Config, settings
from stateint.utils import parse_config


class TestConfig:
    def teardown_method(self):
        Config.reset()

    def test_defaults(self):
        assert settings('dilog').cut_tolerance == 1e-13
        assert settings('faddeev').strip_margin == 0.05
        assert settings('quadrature').order == 16
        assert settings('evaluator').lambda_fraction == 0.05
        Config().check_config()

    def test_singleton(self):
        assert Config() is Config()

    def test_missing_section(self):
        folder = os.path.dirname(os.path.abspath(__file__))
        config = Config()
        config.configure(**parse_config(os.path.join(folder, 'cnfg_test.yml')))
        with pytest.raises(ValueError):
            config.check_config()

    def test_update(self):
        Config().update('quadrature', panels=32)
        assert settings('quadrature').panels == 32
        Config.reset()
        assert settings('quadrature').panels == 16

    def test_tolerance_floor(self):
        with pytest.raises(ValueError):
            Config().update('quadrature', tol=1e-15)
