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
"""Logger"""
import logging

from stateint.singleton import Singleton


class Logger(metaclass=Singleton):
    """Thin wrapper over the 'stateint' logging channel. Output goes to
    stderr so that stdout of the CLI stays deterministic."""

    def __init__(self, *args, **kwargs):
        self.logger = logging.getLogger('stateint')
        if not self.logger.handlers:
            handler = logging.StreamHandler()
            handler.setFormatter(logging.Formatter(
                '%(asctime)s %(name)s %(levelname)s: %(message)s'))
            self.logger.addHandler(handler)
            self.logger.setLevel(logging.WARNING)

    def set_level(self, level):
        self.logger.setLevel(level)

    def info(self, message, *args):
        self.logger.info(message, *args)

    def debug(self, message, *args):
        self.logger.debug(message, *args)

    def log(self, exception):
        """Logs exceptions
        :param exception: Exception type from Python
        """
        self.logger.error('[EXCEPTION]: %s: %s',
                          type(exception).__name__, exception)

    def log_and_raise(self, exception):
        """Logs and raises exception
        :param exception: Python Exception object
        """
        self.log(exception)
        raise exception
