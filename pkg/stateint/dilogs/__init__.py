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
"""Dilogarithms: Euler, Rogers, cyclic, plus q-Pochhammer symbols"""
from stateint.dilogs.roots import BranchedLog, RootOfUnity, power_of
from stateint.dilogs.dilog import li2, log1m, rogers, rogers_real
from stateint.dilogs.cyclic import (cyclic_dilog, cyclic_dilog_log_derivative,
                                    pochhammer, slashed_cyclic_dilog)
