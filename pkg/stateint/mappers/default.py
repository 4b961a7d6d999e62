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
"""This module is the base class of the output mappers"""
from abc import abstractmethod


class DefaultMapper():
    """Mappers turn reports and check rows into output structures"""

    def __init__(self, *args, **kwargs):
        pass

    @abstractmethod
    def map(self, objects):
        """Maps objects to the mapper's output structure"""
        raise NotImplementedError
