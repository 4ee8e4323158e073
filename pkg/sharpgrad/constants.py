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
"""Sharp constants in the gradient estimate for bounded harmonic functions in the unit ball

C(rho e_1, l_alpha) by its hypergeometric integral representation, the gradient constant
C(x) as the supremum over directions, the closed-form radial constant in dimension 3, the
constant at the center of the ball and the half-space constant.
"""
import logging
import math
from enum import Enum
from functools import partial
from typing import NamedTuple, Optional

import numpy as np

from .dispatch import GridDispatcher
from .exceptions import EDomainError
from .optimize import golden_section_maximize, grid_maximum
from .reduced import alpha_shift, representation_integral, representation_prefactor
from .specfun import log_gamma

logger = logging.getLogger(__name__)

MIN_TOL = 1e-12
ALPHA_GRID_POINTS = 65
GOLDEN_WIDTH = 1e-6
# Profile values this close to the best one count as ties
TIE_TOL = 1e-9
SMALL_RHO = 1e-4


class Method(str, Enum):
    """Evaluation method of a sharp constant"""

    REPRESENTATION = "representation"
    ORACLE_DIRECT = "oracle-direct"
    ORACLE_MOEBIUS = "oracle-moebius"
    CLOSED3 = "closed3"


class ProblemPoint(NamedTuple):
    """Point rho e_1 of the unit ball in dimension n with direction l = e_1 cos(alpha) +
    e_2 sin(alpha)"""

    n: int
    rho: float
    alpha: float

    @property
    def alpha_rho(self) -> float:
        return alpha_shift(self.n, self.rho)

    @property
    def direction(self) -> np.ndarray:
        l = np.zeros(self.n)
        l[0], l[1] = math.cos(self.alpha), math.sin(self.alpha)
        return l

    def validate(self) -> "ProblemPoint":
        """Returns the point itself, raises :class:`EDomainError` if it is out of range"""
        if int(self.n) != self.n or self.n < 3:
            raise EDomainError("Dimension must be an integer n >= 3", n=self.n)
        if not 0 <= self.rho < 1:
            raise EDomainError("Radius must satisfy 0 <= rho < 1", rho=self.rho)
        if not 0 <= self.alpha <= math.pi / 2 + 1e-12:
            raise EDomainError("Angle must satisfy 0 <= alpha <= pi/2", alpha=self.alpha)
        return self


class ConstantEstimate(NamedTuple):
    """Computed sharp constant with the method used and a propagated error bound"""

    value: float
    method: Method
    error_bound: float
    converged: bool = True


class GradientConstant(NamedTuple):
    """Supremum of the directional constant over alpha and its location"""

    estimate: ConstantEstimate
    argmax_alpha: float


class SphereGeometry(NamedTuple):
    """Unit sphere S^{n-1} with its surface area omega_n = 2 pi^{n/2} / Gamma(n/2)"""

    n: int
    omega: float

    @classmethod
    def for_dimension(cls, n: int) -> "SphereGeometry":
        if n < 1:
            raise EDomainError("Sphere dimension must be positive", n=n)
        return cls(n, 2 * math.pi ** (n / 2) / math.exp(log_gamma(n / 2)))


def directional_constant(pt: ProblemPoint, tol: float = 1e-9) -> ConstantEstimate:
    """C(rho e_1, l_alpha) from its hypergeometric integral representation

    The integral over x in [-1, 1] is computed in theta = arccos(x) with a breakpoint at the
    kink x = alpha_rho cos(alpha); its error estimate is scaled by the prefactor.
    """
    pt.validate()
    if not tol >= MIN_TOL:
        raise EDomainError(f"Tolerance must be at least {MIN_TOL}", tol=tol)
    prefactor = representation_prefactor(pt.n, pt.rho)
    result = representation_integral(pt.n, pt.rho, pt.alpha, tol / prefactor)
    if not result.converged:
        logger.warning("Representation of C%s did not converge", tuple(pt))
    return ConstantEstimate(
        prefactor * result.value,
        Method.REPRESENTATION,
        prefactor * result.error_estimate,
        result.converged,
    )


def _profile_value(n: int, rho: float, tol: float, alpha: float) -> ConstantEstimate:
    return directional_constant(ProblemPoint(n, rho, alpha), tol)


def gradient_constant(n: int, rho: float, tol: float = 1e-9, jobs: int = 1) -> GradientConstant:
    """C(rho e_1) = sup over alpha in [0, pi/2] of C(rho e_1, l_alpha)

    A 65-point uniform grid in alpha locates the best cell, golden-section search refines it
    to a bracket of width 1e-6. Ties are broken towards the smaller alpha, so a flat profile
    reports alpha = 0.
    """
    ProblemPoint(n, rho, 0.0).validate()
    alphas = [float(a) for a in np.linspace(0.0, math.pi / 2, ALPHA_GRID_POINTS)]
    profile = partial(_profile_value, n, rho, tol)
    estimates = GridDispatcher(jobs).map(profile, alphas)
    values = [e.value for e in estimates]
    tie = TIE_TOL * max(1.0, max(values))
    best = grid_maximum(values, tie)
    if len(best.local_maxima) > 1:
        logger.info(
            "Profile of C(%.6g e_1) in dimension %d has %d local maxima near the top at alpha=%s",
            rho,
            n,
            len(best.local_maxima),
            ", ".join(f"{alphas[i]:.6g}" for i in best.local_maxima),
        )
    lo = alphas[max(best.index - 1, 0)]
    hi = alphas[min(best.index + 1, len(alphas) - 1)]
    refined = {}

    def objective(alpha: float) -> float:
        refined[alpha] = profile(alpha)
        return refined[alpha].value

    alpha_star, value_star = golden_section_maximize(objective, lo, hi, GOLDEN_WIDTH)
    if value_star > best.value + tie:
        estimate, argmax = refined[alpha_star], alpha_star
    else:
        estimate, argmax = estimates[best.index], alphas[best.index]
    converged = all(e.converged for e in estimates) and estimate.converged
    return GradientConstant(estimate._replace(converged=converged), argmax)


def radial_constant_closed3(rho: float) -> float:
    """Closed-form C(rho e_1) = C(rho e_1, e_1) in dimension 3:
    (1/rho^2) ((1 + rho^2/3)^{3/2} / (1 - rho^2) - 1)"""
    if not 0 <= rho < 1:
        raise EDomainError("Radius must satisfy 0 <= rho < 1", rho=rho)
    r2 = rho * rho
    if rho < SMALL_RHO:
        return 1.5 + r2 * (37 / 24 + r2 * (665 / 432 + r2 * 5321 / 3456))
    return math.expm1(1.5 * math.log1p(r2 / 3) - math.log1p(-r2)) / r2


def center_constant(n: int) -> float:
    """Sharp constant at the center of the ball: 2 n omega_{n-1} / ((n - 1) omega_n)"""
    if n < 2:
        raise EDomainError("Dimension must satisfy n >= 2", n=n)
    omega_n = SphereGeometry.for_dimension(n).omega
    omega_m = SphereGeometry.for_dimension(n - 1).omega
    return 2 * n * omega_m / ((n - 1) * omega_n)


def halfspace_constant(n: int) -> float:
    """Coefficient of 1/x_n in the sharp gradient estimate in the half-space:
    (4/sqrt(pi)) ((n-1)^{(n-1)/2} / n^{n/2}) Gamma(n/2) / Gamma((n-1)/2)"""
    if n < 2:
        raise EDomainError("Dimension must satisfy n >= 2", n=n)
    log_value = (
        (n - 1) / 2 * math.log(n - 1)
        - n / 2 * math.log(n)
        + log_gamma(n / 2)
        - log_gamma((n - 1) / 2)
    )
    return 4 / math.sqrt(math.pi) * math.exp(log_value)


def closed3_estimate(pt: ProblemPoint) -> Optional[ConstantEstimate]:
    """Closed-form estimate, defined for n = 3 on the radial direction only"""
    pt.validate()
    if pt.n != 3 or pt.alpha != 0:
        return None
    return ConstantEstimate(radial_constant_closed3(pt.rho), Method.CLOSED3, 0.0, True)
