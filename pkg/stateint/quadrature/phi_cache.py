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
"""This module keeps log Phi_b values of quadrature nodes on disk"""
import atexit
import hashlib
import tempfile

import numpy as np
from diskcache import Cache

from stateint.config import settings
from stateint.faddeev.strip import log_phi_strip, real_b
from stateint.logger import Logger
from stateint.singleton import Singleton

LG = Logger()


class PhiCache(metaclass=Singleton):
    """Memoizes log Phi_b on whole node arrays. The key is b, the
    whole 'faddeev' section and the sha1 of the node bytes, so a
    cached value is always the one a fresh evaluation would return.

    Without a configured directory the cache lives in a temporary
    directory that is removed by ``close``, at the latest on exit."""

    def __init__(self):
        cfg = settings('cache')
        self.enabled = bool(cfg.enabled)
        self.cache = None
        self._scratch = None
        if self.enabled:
            directory = cfg.get('directory')
            if directory is None:
                self._scratch = tempfile.TemporaryDirectory(prefix='stateint-phi-')
                directory = self._scratch.name
            self.cache = Cache(directory)
            atexit.register(self.close)
        self.hits = 0
        self.misses = 0

    @property
    def directory(self):
        return self.cache.directory if self.cache is not None else None

    @staticmethod
    def key(b, xs):
        inner = settings('faddeev')
        digest = hashlib.sha1(np.ascontiguousarray(xs).tobytes()).hexdigest()
        return (repr(b), repr(sorted(inner.items())), digest)

    def log_phi(self, pair_or_b, xs):
        """log Phi_b on xs, from the cache when possible
        :param xs: complex node array inside the strip
        """
        b = real_b(pair_or_b)
        xs = np.atleast_1d(np.asarray(xs, dtype=complex))
        if self.cache is None:
            return log_phi_strip(b, xs)
        key = self.key(b, xs)
        values = self.cache.get(key)
        if values is not None:
            self.hits += 1
            LG.debug('phi cache hit for %d nodes', xs.size)
            return values
        self.misses += 1
        values = log_phi_strip(b, xs)
        self.cache.set(key, values)
        return values

    def clear(self):
        if self.cache is not None:
            self.cache.clear()
        self.hits = self.misses = 0

    def close(self):
        """Closes the cache and removes a temporary directory. Later
        lookups evaluate directly."""
        if self.cache is not None:
            self.cache.close()
            self.cache = None
        if self._scratch is not None:
            self._scratch.cleanup()
            self._scratch = None
        atexit.unregister(self.close)
