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
"""This module maps rows of results to pandas DataFrames"""
import pandas as pd

from stateint.mappers.default import DefaultMapper


class TableMapper(DefaultMapper):
    """Rows (dicts) to a DataFrame. Complex cells become a+bi strings
    with a fixed number of significant digits, so text output does not
    depend on pandas' complex formatting."""

    def __init__(self, digits=12, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.digits = digits

    def _cell(self, value):
        if isinstance(value, complex):
            return '{:.{d}g}{:+.{d}g}i'.format(value.real, value.imag, d=self.digits)
        return value

    def map(self, objects):
        """Maps a list of dicts to a DataFrame, one row per dict
        :param objects: list of dicts sharing their keys
        """
        return pd.DataFrame([{k: self._cell(v) for k, v in row.items()}
                             for row in objects])

    def to_text(self, objects):
        """Fixed-format text rendering of the mapped rows"""
        frame = self.map(objects)
        if frame.empty:
            return '(empty)'
        return frame.to_string(
            index=False,
            float_format=lambda v: '{:.{d}g}'.format(v, d=self.digits))
