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
"""Gauss-Legendre rules, adaptive 1D quadrature with declared breakpoints and quadrature over
the unit sphere with respect to the normalized surface measure"""
import logging
import math
from functools import lru_cache
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .exceptions import EConvergenceError, EDomainError
from .specfun import beta

logger = logging.getLogger(__name__)

MAX_RULE_ORDER = 512
PANEL_ORDER = 32
CHECK_ORDER = 16
MAX_DEPTH = 30
MAX_PANELS = 20000
# Panels whose two-rule difference is below this multiple of eps * integral of |f| are final
ROUNDOFF_FACTOR = 100.0

POLAR_NODES = 128
AZIMUTH_NODES = 256
INNER_POLAR_NODES = 32
INNER_AZIMUTH_NODES = 64
SUBPANEL_ORDER = 128
# Points evaluated per call of a sphere integrand
SPHERE_CHUNK = 1 << 20

VectorFunction = Callable[[np.ndarray], np.ndarray]


class QuadratureRule(NamedTuple):
    """Gauss-Legendre rule on [-1, 1]"""

    order: int
    nodes: np.ndarray
    weights: np.ndarray


class QuadratureResult(NamedTuple):
    """Integral value with an a posteriori error estimate"""

    value: float
    error_estimate: float
    evaluations: int
    converged: bool


def _legendre(m: int, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """P_m(x) and P_m'(x) by the three-term recurrence"""
    p_prev, p = np.ones_like(x), x.copy()
    for j in range(2, m + 1):
        p_prev, p = p, ((2 * j - 1) * x * p - (j - 1) * p_prev) / j
    return p, m * (x * p - p_prev) / (x * x - 1)


@lru_cache(maxsize=None)
def gauss_legendre_rule(order: int) -> QuadratureRule:
    """Gauss-Legendre nodes and weights of the given order on [-1, 1]

    Roots of the Legendre polynomial are found by Newton iteration on the three-term recurrence,
    started from the Chebyshev-angle approximation cos(pi (i - 1/4) / (m + 1/2)). Nodes are
    returned in increasing order and symmetrized about 0.
    """
    if not 1 <= order <= MAX_RULE_ORDER:
        raise EDomainError(f"Rule order must be within [1, {MAX_RULE_ORDER}]", order=order)
    m = order
    i = np.arange(1, m + 1)
    x = np.cos(np.pi * (i - 0.25) / (m + 0.5))
    for _ in range(100):
        p, dp = _legendre(m, x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-14:
            break
    else:
        raise EConvergenceError("Legendre root iteration did not converge", order=order)
    # One more step after the quadratic regime is reached
    p, dp = _legendre(m, x)
    x = x - p / dp
    _, dp = _legendre(m, x)
    weights = 2.0 / ((1.0 - x * x) * dp * dp)
    x, weights = x[::-1], weights[::-1]
    x = 0.5 * (x - x[::-1])
    weights = 0.5 * (weights + weights[::-1])
    x.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(order, x, weights)


class _Panel(NamedTuple):
    lo: float
    hi: float
    depth: int
    value: float
    error: float
    final: bool


def _evaluate_panels(
    f: VectorFunction, bounds: Sequence[Tuple[float, float, int]]
) -> List[_Panel]:
    """Evaluates the 32/16-point rules on every panel with a single call of f"""
    fine, coarse = gauss_legendre_rule(PANEL_ORDER), gauss_legendre_rule(CHECK_ORDER)
    unit = np.concatenate((fine.nodes, coarse.nodes))
    lo = np.array([b[0] for b in bounds])
    hi = np.array([b[1] for b in bounds])
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    x = mid[:, None] + half[:, None] * unit[None, :]
    y = np.asarray(f(x.reshape(-1)), dtype=float).reshape(x.shape)
    if not np.all(np.isfinite(y)):
        raise EDomainError("Integrand is not finite inside the integration interval")
    q_fine = half * (y[:, :PANEL_ORDER] @ fine.weights)
    q_coarse = half * (y[:, PANEL_ORDER:] @ coarse.weights)
    q_abs = half * (np.abs(y[:, :PANEL_ORDER]) @ fine.weights)
    error = np.abs(q_fine - q_coarse)
    floor = ROUNDOFF_FACTOR * np.finfo(float).eps * q_abs
    return [
        _Panel(b[0], b[1], b[2], float(q_fine[i]), float(error[i]), bool(error[i] <= floor[i]))
        for i, b in enumerate(bounds)
    ]


def integrate_adaptive(
    f: VectorFunction,
    a: float,
    b: float,
    tol: float,
    breakpoints: Sequence[float] = (),
    max_depth: int = MAX_DEPTH,
) -> QuadratureResult:
    """Adaptive Gauss-Legendre quadrature of f over [a, b]

    ``f`` is vectorized: it takes a numpy array of abscissae and returns the array of values.
    The interval is first split at the breakpoints, then panels are bisected while their
    share of the error budget is exceeded. A panel estimate is the 32-point Gauss-Legendre
    result, its error the difference with the 16-point result. Panel values are summed in
    left-to-right order.

    :raise EDomainError: On an empty interval, breakpoints outside (a, b) or a non-finite integrand
    :return: Result with ``converged = False`` if the depth limit stops the refinement
    """
    if not a < b:
        raise EDomainError("Integration requires a < b", a=a, b=b)
    if not tol > 0:
        raise EDomainError("Tolerance must be positive", tol=tol)
    inner = sorted(set(float(p) for p in breakpoints))
    if any(not a < p < b for p in inner):
        raise EDomainError("Breakpoints must lie inside (a, b)", breakpoints=inner, a=a, b=b)
    edges = [a] + inner + [b]
    panels = _evaluate_panels(f, [(lo, hi, 0) for lo, hi in zip(edges[:-1], edges[1:])])
    evaluations = len(panels) * (PANEL_ORDER + CHECK_ORDER)
    length = b - a

    while True:
        total_error = math.fsum(p.error for p in panels)
        if total_error <= tol:
            break
        split = [
            i
            for i, p in enumerate(panels)
            if not p.final and p.depth < max_depth and p.error > tol * (p.hi - p.lo) / length
        ]
        if not split or len(panels) + len(split) > MAX_PANELS:
            break
        children = []
        for i in split:
            p = panels[i]
            mid = 0.5 * (p.lo + p.hi)
            children.extend(((p.lo, mid, p.depth + 1), (mid, p.hi, p.depth + 1)))
        evaluated = iter(_evaluate_panels(f, children))
        evaluations += len(children) * (PANEL_ORDER + CHECK_ORDER)
        split_set = set(split)
        refined: List[_Panel] = []
        for i, p in enumerate(panels):
            if i in split_set:
                refined.extend((next(evaluated), next(evaluated)))
            else:
                refined.append(p)
        panels = refined

    total_error = math.fsum(p.error for p in panels)
    converged = total_error <= tol or all(
        p.final or p.error <= tol * (p.hi - p.lo) / length for p in panels
    )
    if not converged:
        logger.warning(
            "Adaptive quadrature on [%g, %g] stopped with error %.3g > %.3g (%d panels)",
            a,
            b,
            total_error,
            tol,
            len(panels),
        )
    return QuadratureResult(
        math.fsum(p.value for p in panels), total_error, evaluations, converged
    )


def _panel_rule(edges: Sequence[float], count: int) -> Tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre rule with ``count`` nodes on each panel

    Panels needing more than SUBPANEL_ORDER nodes are split into equal subpanels.
    """
    pieces = -(-count // SUBPANEL_ORDER)
    rule = gauss_legendre_rule(-(-count // pieces))
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        cuts = np.linspace(lo, hi, pieces + 1)
        for sub_lo, sub_hi in zip(cuts[:-1], cuts[1:]):
            mid, half = 0.5 * (sub_lo + sub_hi), 0.5 * (sub_hi - sub_lo)
            nodes.append(mid + half * rule.nodes)
            weights.append(half * rule.weights)
    return np.concatenate(nodes), np.concatenate(weights)


def _polar_rule(
    m: int, count: int, breakpoints: Sequence[float] = ()
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Rule for the first coordinate of S^{m-1}, m >= 3: returns cos(theta), sin(theta) and
    weights including sin^{m-2}(theta) normalized to total 1"""
    cuts = sorted(set(math.acos(t) for t in breakpoints if -1 < t < 1))
    theta, weights = _panel_rule([0.0] + cuts + [math.pi], count)
    weights = weights * np.sin(theta) ** (m - 2) / beta(0.5, (m - 1) / 2)
    return np.cos(theta), np.sin(theta), weights


def _circle_rule(count: int, breakpoints: Sequence[float] = ()) -> Tuple[np.ndarray, np.ndarray]:
    """Points and weights on S^1: uniform trapezoid, or Gauss panels when the first coordinate
    carries breakpoints"""
    angles = [math.acos(t) for t in breakpoints if -1 < t < 1]
    cuts = sorted(set(angles + [2 * math.pi - a for a in angles]))
    if cuts:
        phi, weights = _panel_rule([0.0] + cuts + [2 * math.pi], count)
        weights = weights / (2 * math.pi)
    else:
        phi = 2 * math.pi * np.arange(count) / count
        weights = np.full(count, 1.0 / count)
    return np.column_stack((np.cos(phi), np.sin(phi))), weights


def _inner_rule(m: int, level: int, refinement: int, active: int) -> Tuple[np.ndarray, np.ndarray]:
    """Tensor rule on S^{m-1} below the top level of the recursive decomposition"""
    if active <= 0:
        point = np.zeros((1, m))
        point[0, 0] = 1.0
        return point, np.ones(1)
    if m == 2:
        count = (AZIMUTH_NODES if level <= 1 else INNER_AZIMUTH_NODES) * refinement
        return _circle_rule(count)
    count = (POLAR_NODES if level <= 1 else INNER_POLAR_NODES) * refinement
    cos_t, sin_t, w_t = _polar_rule(m, count)
    sub_points, sub_weights = _inner_rule(m - 1, level + 1, refinement, active - 1)
    points = np.concatenate(
        (
            np.repeat(cos_t, len(sub_weights))[:, None],
            np.kron(sin_t[:, None], sub_points),
        ),
        axis=1,
    )
    return points, np.kron(w_t, sub_weights)


def _sphere_sum(
    g: VectorFunction,
    n: int,
    refinement: int,
    breakpoints: Sequence[float],
    active: int,
) -> Tuple[float, int]:
    if n == 2:
        points, weights = _circle_rule(AZIMUTH_NODES * refinement, breakpoints)
        return math.fsum(weights * np.asarray(g(points), dtype=float)), len(weights)
    cos_t, sin_t, w_t = _polar_rule(n, POLAR_NODES * refinement, breakpoints)
    sub_points, sub_weights = _inner_rule(n - 1, 1, refinement, active - 1)
    chunk = max(1, SPHERE_CHUNK // len(sub_weights))
    partial = []
    for start in range(0, len(w_t), chunk):
        c, s, w = cos_t[start:start + chunk], sin_t[start:start + chunk], w_t[start:start + chunk]
        points = np.empty((len(c), len(sub_weights), n))
        points[:, :, 0] = c[:, None]
        points[:, :, 1:] = s[:, None, None] * sub_points[None, :, :]
        values = np.asarray(g(points.reshape(-1, n)), dtype=float).reshape(len(c), -1)
        partial.extend(w * (values @ sub_weights))
    return math.fsum(partial), len(w_t) * len(sub_weights)


def sphere_integral(
    g: VectorFunction,
    n: int,
    refinement: int = 1,
    tol: float = 1e-9,
    polar_breakpoints: Sequence[float] = (),
    active_dims: Optional[int] = None,
) -> QuadratureResult:
    """Integral of g over S^{n-1} with respect to the normalized surface measure

    The sphere is decomposed recursively as xi = (cos(theta), sin(theta) omega) with omega on
    S^{n-2}. Each polar level uses Gauss-Legendre nodes in theta with the sin^{m-2}(theta)
    weight folded in, the base circle uses the uniform trapezoid rule. The rule is evaluated at
    ``refinement`` and ``2 * refinement``; the finer value is returned and the difference is
    the error estimate.

    :param g: Vectorized integrand taking an (N, n) array of unit vectors
    :param polar_breakpoints: Values of xi_1 where g has a kink or a jump
    :param active_dims: Number of leading coordinates g depends on; lower levels are collapsed
        to a single representative point each
    """
    if n < 2:
        raise EDomainError("Sphere dimension must satisfy n >= 2", n=n)
    if refinement < 1:
        raise EDomainError("Refinement must be a positive integer", refinement=refinement)
    active = n if active_dims is None else max(1, min(int(active_dims), n))
    coarse, coarse_count = _sphere_sum(g, n, refinement, polar_breakpoints, active)
    fine, fine_count = _sphere_sum(g, n, 2 * refinement, polar_breakpoints, active)
    error = abs(fine - coarse)
    converged = error <= tol
    if not converged:
        logger.info("Sphere quadrature (n=%d) refinement difference %.3g > %.3g", n, error, tol)
    return QuadratureResult(fine, error, coarse_count + fine_count, converged)
