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
"""Deterministic scalar maximization: uniform grid scan and golden-section refinement"""
import math
from typing import Callable, List, NamedTuple, Sequence, Tuple

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


class GridMaximum(NamedTuple):
    """Best node of a grid scan"""

    index: int
    value: float
    local_maxima: List[int]


def golden_section_maximize(
    f: Callable[[float], float], a: float, b: float, width: float = 1e-6
) -> Tuple[float, float]:
    """Golden-section search for the maximum of f on [a, b]

    Assumes f has a single local maximum in the bracket. Returns the best sampled abscissa
    with its value once the bracket is narrower than ``width``. Equal values move the bracket
    towards ``a``.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= width:
        return a, f(a)

    # Required steps to achieve the width
    steps = int(math.ceil(math.log(width / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(steps - 1):
        if yc >= yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    return (c, yc) if yc >= yd else (d, yd)


def grid_maximum(values: Sequence[float], tie: float) -> GridMaximum:
    """Index of the grid maximum, ties within ``tie`` broken towards the smallest index

    Also lists every local maximum of the grid profile whose value is within ``tie`` of the
    best one.
    """
    best = max(values)
    index = next(i for i, v in enumerate(values) if v >= best - tie)
    local_maxima = [
        i
        for i, v in enumerate(values)
        if v >= best - tie
        and (i == 0 or v >= values[i - 1])
        and (i == len(values) - 1 or v >= values[i + 1])
    ]
    return GridMaximum(index, values[index], local_maxima)
