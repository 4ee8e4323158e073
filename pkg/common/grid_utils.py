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
"""Parsing of scalar and grid specifications given on the command line"""
import re
from typing import List, NamedTuple, Optional, Union

import numpy as np

grid_regex = re.compile(r"^\s*([^:\s]+)\s*:\s*([^:\s]+)\s*:\s*([^:\s]+)\s*$")


class GridSpec(NamedTuple):
    """Uniform grid ``start:stop:count``; a single value is a grid of count 1"""

    start: float
    stop: float
    count: int

    def values(self) -> List[float]:
        """Grid nodes, endpoints included"""
        if self.count == 1:
            return [self.start]
        return [float(v) for v in np.linspace(self.start, self.stop, self.count)]


class EInvalidGridSpec(Exception):
    """Invalid grid specification"""

    def __init__(self, spec: Optional[str] = None, message: Optional[str] = None, **kwargs):
        self.message = message if isinstance(message, str) else "Invalid grid specification"
        self.spec = spec
        super().__init__(dict(**kwargs, **{"spec": spec, "message": message}))

    def __str__(self):
        return ": ".join((self.message, self.spec)) if isinstance(self.spec, str) else self.message


def _number(token: str, spec: str) -> float:
    try:
        value = float(token)
    except ValueError as exc:
        raise EInvalidGridSpec(spec, f"Not a number '{token}'") from exc
    if not np.isfinite(value):
        raise EInvalidGridSpec(spec, f"Not a finite number '{token}'")
    return value


def parse_grid(spec: Union[str, float]) -> List[float]:
    """Parses a real grid specification into the list of its nodes

    Accepted forms are a single value (``0.5``), a comma-separated list of values
    (``0.1,0.3,0.5``) and a uniform grid ``start:stop:count`` with ``count >= 1``.

    :raise EInvalidGridSpec: If the specification can't be parsed
    :Example:
    >>> parse_grid("0:1:5")
    [0.0, 0.25, 0.5, 0.75, 1.0]
    """
    if not isinstance(spec, str):
        return [float(spec)]
    match = grid_regex.match(spec)
    if match:
        start, stop = _number(match.group(1), spec), _number(match.group(2), spec)
        try:
            count = int(match.group(3))
        except ValueError as exc:
            raise EInvalidGridSpec(spec, "Grid count must be an integer") from exc
        if count < 1:
            raise EInvalidGridSpec(spec, "Grid count must be at least 1")
        return GridSpec(start, stop, count).values()
    if ":" in spec:
        raise EInvalidGridSpec(spec, "Expected start:stop:count")
    tokens = [t for t in spec.split(",") if t.strip()]
    if not tokens:
        raise EInvalidGridSpec(spec, "Empty grid")
    return [_number(t.strip(), spec) for t in tokens]


def parse_int_grid(spec: Union[str, int]) -> List[int]:
    """Parses an integer grid: a value, a comma list, or an inclusive range ``first:last``"""
    if not isinstance(spec, str):
        return [int(spec)]
    parts = spec.split(":")
    try:
        if len(parts) == 2:
            first, last = int(parts[0]), int(parts[1])
            if last < first:
                raise EInvalidGridSpec(spec, "Empty integer range")
            return list(range(first, last + 1))
        if len(parts) == 1:
            tokens = [t for t in spec.split(",") if t.strip()]
            if tokens:
                return [int(t) for t in tokens]
    except ValueError as exc:
        raise EInvalidGridSpec(spec, "Not an integer") from exc
    raise EInvalidGridSpec(spec, "Expected a value, a list or first:last")
