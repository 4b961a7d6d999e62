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
"""Integrand specs and root-of-unity state-sums"""
from stateint.sums.default import DefaultSpec
from stateint.sums.specs import ABSpec, PretzelSpec, make_spec
from stateint.sums.state_sums import big_g_mn, big_g_n, g_k, g_ladder
