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
"""Integral identities behind the hypergeometric representation and the quantities S, S1, S2
that build the majorant of the directional constant"""
import math
from typing import NamedTuple

import numpy as np

from .constants import ProblemPoint
from .reduced import (
    alpha_shift,
    gegenbauer_integral,
    hypergeometric_excess,
    hypergeometric_factor,
    kernel_base,
    representation_integral,
)

IDENTITY_TOL = 1e-8
QUAD_TOL = 1e-11


class IdentityReport(NamedTuple):
    """Both sides of an identity or an inequality lhs <= rhs, with the verdict"""

    lhs: float
    rhs: float
    abs_gap: float
    tolerance: float
    passed: bool

    @classmethod
    def equality(
        cls, lhs: float, rhs: float, tolerance: float, error: float = 0.0
    ) -> "IdentityReport":
        gap = abs(lhs - rhs)
        return cls(lhs, rhs, gap, tolerance, bool(gap <= tolerance + error))

    @classmethod
    def inequality(
        cls, lhs: float, rhs: float, tolerance: float, error: float = 0.0
    ) -> "IdentityReport":
        gap = max(lhs - rhs, 0.0)
        return cls(lhs, rhs, gap, tolerance, bool(gap <= tolerance + error))


class SIntegrals(NamedTuple):
    S: float
    S1: float
    S2: float
    error_estimate: float


def _weighted(n: int, rho: float, alpha: float):
    """Kernel (1 + rho^2 - 2 rho x cos(alpha))^{1-n/2} as a function of x"""

    def kernel(x: np.ndarray) -> np.ndarray:
        return kernel_base(rho, alpha, x) ** (1.0 - n / 2)

    return kernel


def lemma3_sides(
    n: int, rho: float, alpha: float, tol: float = QUAD_TOL, tolerance: float = IDENTITY_TOL
) -> IdentityReport:
    """Hypergeometric-weighted integral of the kernel against the same integral at alpha = 0,
    where the hypergeometric argument vanishes"""
    ProblemPoint(n, rho, alpha).validate()
    kernel, radial = _weighted(n, rho, alpha), _weighted(n, rho, 0.0)
    lhs = gegenbauer_integral(
        n, lambda x: kernel(x) * hypergeometric_factor(n, rho, alpha, x), tol
    )
    rhs = gegenbauer_integral(n, radial, tol)
    return IdentityReport.equality(
        lhs.value, rhs.value, tolerance, lhs.error_estimate + rhs.error_estimate
    )


def lemma4_sides(
    n: int, rho: float, alpha: float, tol: float = QUAD_TOL, tolerance: float = IDENTITY_TOL
) -> IdentityReport:
    """x^2-weighted counterpart of :func:`lemma3_sides`; the right side splits into the
    sin^2(alpha) and cos^2(alpha) parts"""
    ProblemPoint(n, rho, alpha).validate()
    kernel, radial = _weighted(n, rho, alpha), _weighted(n, rho, 0.0)
    lhs = gegenbauer_integral(
        n, lambda x: x * x * kernel(x) * hypergeometric_factor(n, rho, alpha, x), tol
    )
    transverse = gegenbauer_integral(n, lambda x: (1.0 - x * x) * radial(x), tol)
    axial = gegenbauer_integral(n, lambda x: x * x * radial(x), tol)
    rhs = math.sin(alpha) ** 2 / (n - 1) * transverse.value + math.cos(alpha) ** 2 * axial.value
    error = lhs.error_estimate + transverse.error_estimate + axial.error_estimate
    return IdentityReport.equality(lhs.value, rhs, tolerance, error)


def lemma5_value(
    n: int, rho: float, alpha: float, tol: float = QUAD_TOL, tolerance: float = 1e-9
) -> IdentityReport:
    """Signed version of the representation integral, which vanishes identically"""
    ProblemPoint(n, rho, alpha).validate()
    kernel = _weighted(n, rho, alpha)
    kink = alpha_shift(n, rho) * math.cos(alpha)
    value = gegenbauer_integral(
        n, lambda x: (kink - x) * kernel(x) * hypergeometric_factor(n, rho, alpha, x), tol
    )
    return IdentityReport.equality(value.value, 0.0, tolerance, value.error_estimate)


def s_integrals(n: int, rho: float, alpha: float, tol: float = QUAD_TOL) -> SIntegrals:
    """S, S1 and S2 by quadrature

    S drops the hypergeometric factor from the representation integral, S1 and S2 integrate
    its excess over 1 with weights 1 and (alpha_rho cos(alpha) - x)^2.
    """
    ProblemPoint(n, rho, alpha).validate()
    kernel = _weighted(n, rho, alpha)
    kink = alpha_shift(n, rho) * math.cos(alpha)
    s = gegenbauer_integral(n, lambda x: np.abs(kink - x) * kernel(x), tol, [kink])
    s1 = gegenbauer_integral(
        n, lambda x: kernel(x) * hypergeometric_excess(n, rho, alpha, x), tol
    )
    s2 = gegenbauer_integral(
        n,
        lambda x: (kink - x) ** 2 * kernel(x) * hypergeometric_excess(n, rho, alpha, x),
        tol,
    )
    error = s.error_estimate + s1.error_estimate + s2.error_estimate
    return SIntegrals(s.value, s1.value, s2.value, error)


def cauchy_schwarz_bound(
    n: int, rho: float, alpha: float, tol: float = QUAD_TOL, tolerance: float = IDENTITY_TOL
) -> IdentityReport:
    """Representation integral against its majorant S + sqrt(S1 S2)"""
    parts = s_integrals(n, rho, alpha, tol)
    full = representation_integral(n, rho, alpha, tol)
    bound = parts.S + math.sqrt(max(parts.S1, 0.0) * max(parts.S2, 0.0))
    return IdentityReport.inequality(
        full.value, bound, tolerance, full.error_estimate + parts.error_estimate
    )
