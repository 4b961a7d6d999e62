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
"""Faddeev's quantum dilogarithm"""
from stateint.faddeev.pair import AdmissiblePair, bezout
from stateint.faddeev.strip import (log_phi_integral, log_phi_strip,
                                    log_phi_zero, phi_strip, phi_zero)
from stateint.faddeev.continuation import phi, phi_poles, phi_zeros
from stateint.faddeev.rational import (phi_m1, phi_rational,
                                       phi_rational_shifted, phi_unit)
