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

from stateint.utils import fmt17, format_complex, parse_complex, parse_config


class TestUtils:
    def test_parse_config(self):
        folder = os.path.dirname(os.path.abspath(__file__))
        conf = parse_config(os.path.join(folder, 'cnfg_test.yml'))
        assert conf['dilog']['series_radius'] == 0.5
        assert conf.quadrature.order == 8
        assert conf.quadrature.tol == 1e-9

    @pytest.mark.parametrize('text,expected', [
        ('0', 0j), ('2', 2 + 0j), ('-2.5', -2.5 + 0j),
        ('0.3i', 0.3j), ('-0.3i', -0.3j), ('i', 1j), ('-i', -1j),
        ('0.1+0.05i', 0.1 + 0.05j), ('1-2i', 1 - 2j), ('2+i', 2 + 1j),
        ('.5-.25i', 0.5 - 0.25j)])
    def test_parse_complex(self, text, expected):
        assert parse_complex(text) == expected

    @pytest.mark.parametrize('text', ['', 'x', '1+', '1e3', '1 + 2i', '2i3', '+'])
    def test_parse_complex_rejects(self, text):
        with pytest.raises(ValueError):
            parse_complex(text)

    def test_format(self):
        assert fmt17(0.1) == '0.10000000000000001'
        assert format_complex(1 - 0.5j) == '1-0.5i'
        assert format_complex(complex(0.25, 2)) == '0.25+2i'
        assert parse_complex(format_complex(0.1 + 0.2j)) == 0.1 + 0.2j
