#!/usr/bin/env python
#
# Sharp gradient estimates for bounded harmonic functions in the unit ball
#
# Copyright 2026 sharpgrad contributors
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
"""Grid dispatcher evaluating independent grid points on a worker pool"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from .exceptions import EDomainError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class GridDispatcher:
    """Dispatches a pure function over grid points and collects results in input order

    With a single job everything runs in the calling process. Otherwise points are submitted
    to a process pool; completion order never affects the order of the returned results.
    The callable and the points must be picklable (module-level functions, named tuples).
    """

    def __init__(self, jobs: Optional[int] = 1):
        self.jobs: int = jobs or 1

    @property
    def jobs(self) -> int:
        return self._jobs

    @jobs.setter
    def jobs(self, value: int) -> None:
        if int(value) < 1:
            raise EDomainError("Number of jobs must be positive", jobs=value)
        self._jobs = int(value)

    def map(self, fn: Callable[[T], R], points: Iterable[T]) -> List[R]:
        """Returns ``[fn(p) for p in points]``, possibly computed concurrently"""
        points = list(points)
        workers = min(self.jobs, len(points))
        if workers <= 1:
            return [fn(p) for p in points]
        logger.debug("Dispatching %d grid points to %d workers", len(points), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, points))

    def __reduce__(self):
        """Helper method for pickle"""
        return self.__class__, (self.jobs,)
