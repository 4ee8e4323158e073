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
"""Brute-force evaluations of the sharp constant as integrals over the unit sphere

The directional constant is the mean over the sphere of |<grad_x P(x, zeta), l>|, and after
the Moebius change of variables the mean of a much simpler integrand. Both are evaluated here
with :func:`sharpgrad.quadrature.sphere_integral` after rotating the sphere so the kink of the
integrand lies on a circle of constant first coordinate. The module also checks the projection
formula and the inner-integral identity used to reduce the sphere integral, and differentiates
the extremal function whose boundary data attains the constant.
"""
import logging
import math
from typing import Callable, Dict, NamedTuple, Tuple

import numpy as np

from .constants import ConstantEstimate, Method, ProblemPoint
from .exceptions import EAccuracyError, EDomainError
from .identities import IDENTITY_TOL, IdentityReport
from .quadrature import QuadratureResult, integrate_adaptive, sphere_integral
from .reduced import hypergeometric_factor, kernel_base
from .specfun import beta, log_gamma

logger = logging.getLogger(__name__)

ORACLE_REFINEMENT = 2
EXTREMAL_REFINEMENT = 4
MIN_STEP = 1e-6
MAX_STEP = 1e-2
# Roundoff allowance on |u*| <= 1
BOUND_SLACK = 1e-12

# Profile g(x_1, |x|) of a test function of the projection formula
ProfileFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]

TEST_FUNCTIONS: Dict[str, ProfileFunction] = {
    "one": lambda x1, r: np.ones_like(x1),
    "x1_squared": lambda x1, r: x1 * x1,
    "abs_x1": lambda x1, r: np.abs(x1),
    "radial_bump": lambda x1, r: np.exp(-2.0 * r * r),
}


class RotatedFrame(NamedTuple):
    """Orthonormal pair (u, v) spanning the e_1 e_2 plane; sphere points are taken as
    zeta = eta_1 u + eta_2 v + sum_{j >= 3} eta_j e_j"""

    u: Tuple[float, float]
    v: Tuple[float, float]

    @classmethod
    def along(cls, w1: float, w2: float) -> "RotatedFrame":
        norm = math.hypot(w1, w2)
        return cls((w1 / norm, w2 / norm), (-w2 / norm, w1 / norm))

    def first_coordinate(self, eta: np.ndarray) -> np.ndarray:
        """zeta_1 of the rotated points"""
        return eta[:, 0] * self.u[0] + eta[:, 1] * self.v[0]

    def project(self, x1: float, x2: float) -> Tuple[float, float]:
        """Coordinates of the plane vector (x1, x2) in the rotated frame"""
        return (
            x1 * self.u[0] + x2 * self.u[1],
            x1 * self.v[0] + x2 * self.v[1],
        )


class GradientPlane(NamedTuple):
    """<grad_x P(rho e_1, zeta), l> |rho e_1 - zeta|^{n+2} = |w| <zeta, w/|w|> - c"""

    frame: RotatedFrame
    norm: float
    offset: float

    @classmethod
    def at(cls, pt: ProblemPoint) -> "GradientPlane":
        n, rho = pt.n, pt.rho
        c, s = math.cos(pt.alpha), math.sin(pt.alpha)
        w1 = 4 * rho * rho * c + n * (1 - rho * rho) * c
        w2 = n * (1 - rho * rho) * s
        offset = rho * c * (2 * (1 + rho * rho) + n * (1 - rho * rho))
        return cls(RotatedFrame.along(w1, w2), math.hypot(w1, w2), offset)

    @property
    def kink(self) -> float:
        return self.offset / self.norm


def poisson_kernel(x: np.ndarray, zeta: np.ndarray) -> np.ndarray:
    """P(x, zeta) = (1 - |x|^2) / |x - zeta|^n for a point x and an (N, n) array of zeta"""
    x = np.asarray(x, dtype=float)
    zeta = np.atleast_2d(zeta)
    dist2 = np.sum((x[None, :] - zeta) ** 2, axis=1)
    return (1.0 - x @ x) / dist2 ** (len(x) / 2)


def poisson_gradient(x: np.ndarray, zeta: np.ndarray) -> np.ndarray:
    """grad_x P(x, zeta) = -2x |x - zeta|^{-n} - n (1 - |x|^2)(x - zeta) |x - zeta|^{-n-2}"""
    x = np.asarray(x, dtype=float)
    zeta = np.atleast_2d(zeta)
    n = len(x)
    diff = x[None, :] - zeta
    dist2 = np.sum(diff * diff, axis=1)[:, None]
    return -2.0 * x[None, :] / dist2 ** (n / 2) - n * (1.0 - x @ x) * diff / dist2 ** (n / 2 + 1)


def _estimate(result: QuadratureResult, scale: float, method: Method) -> ConstantEstimate:
    return ConstantEstimate(
        scale * result.value, method, scale * result.error_estimate, result.converged
    )


def constant_oracle_direct(
    pt: ProblemPoint, refinement: int = ORACLE_REFINEMENT, tol: float = 1e-9
) -> ConstantEstimate:
    """Mean of |<grad_x P(rho e_1, zeta), l_alpha>| over the unit sphere"""
    pt.validate()
    n, rho = pt.n, pt.rho
    plane = GradientPlane.at(pt)

    def integrand(eta: np.ndarray) -> np.ndarray:
        dist2 = 1.0 + rho * rho - 2.0 * rho * plane.frame.first_coordinate(eta)
        return np.abs(plane.norm * eta[:, 0] - plane.offset) / dist2 ** (n / 2 + 1)

    result = sphere_integral(
        integrand, n, refinement, tol, polar_breakpoints=(plane.kink,), active_dims=2
    )
    return _estimate(result, 1.0, Method.ORACLE_DIRECT)


def constant_oracle_moebius(
    pt: ProblemPoint, refinement: int = ORACLE_REFINEMENT, tol: float = 1e-9
) -> ConstantEstimate:
    """(n / (1 - rho^2)) times the mean of |<eta - alpha_rho e_1, l>| |eta - rho e_1|^{2-n}"""
    pt.validate()
    n, rho = pt.n, pt.rho
    frame = RotatedFrame.along(math.cos(pt.alpha), math.sin(pt.alpha))
    kink = pt.alpha_rho * math.cos(pt.alpha)

    def integrand(xi: np.ndarray) -> np.ndarray:
        dist2 = 1.0 + rho * rho - 2.0 * rho * frame.first_coordinate(xi)
        return np.abs(xi[:, 0] - kink) * dist2 ** (1.0 - n / 2)

    scale = n / (1.0 - rho * rho)
    result = sphere_integral(
        integrand, n, refinement, tol / scale, polar_breakpoints=(kink,), active_dims=2
    )
    return _estimate(result, scale, Method.ORACLE_MOEBIUS)


def _projection_constant(n: int, k: int) -> float:
    """Gamma(n/2) / (Gamma(k/2 + 1) Gamma((n-k)/2))"""
    return math.exp(log_gamma(n / 2) - log_gamma(k / 2 + 1) - log_gamma((n - k) / 2))


def _spherical_mean(profile: ProfileFunction, k: int, r: float, tol: float) -> float:
    """Mean of f(r omega) over omega in S^{k-1}"""
    if k == 1:
        radius = np.array([r, r])
        return float(np.mean(profile(np.array([r, -r]), radius)))
    weight = beta(0.5, (k - 1) / 2)

    def integrand(phi: np.ndarray) -> np.ndarray:
        return profile(r * np.cos(phi), np.full_like(phi, r)) * np.sin(phi) ** (k - 2) / weight

    return integrate_adaptive(integrand, 0.0, math.pi, tol, (math.pi / 2,)).value


def verify_projection_lemma(
    test_fn: str, n: int, k: int, tol: float = 1e-11, tolerance: float = IDENTITY_TOL
) -> IdentityReport:
    """Sphere mean of f(x_1, ..., x_k) against the weighted integral of f over the ball B^k

    The ball integral runs in polar coordinates with r = sin(psi), which removes the endpoint
    singularity of the weight (1 - r^2)^{(n-k-2)/2}.
    """
    if test_fn not in TEST_FUNCTIONS:
        raise EDomainError(
            f"Unknown test function, expected one of {', '.join(TEST_FUNCTIONS)}",
            test_fn=test_fn,
        )
    if not 1 <= k < n:
        raise EDomainError("Projection requires 1 <= k < n", n=n, k=k)
    profile = TEST_FUNCTIONS[test_fn]

    def on_sphere(xi: np.ndarray) -> np.ndarray:
        return profile(xi[:, 0], np.linalg.norm(xi[:, :k], axis=1))

    lhs = sphere_integral(on_sphere, n, 1, tol, polar_breakpoints=(0.0,), active_dims=k)

    def radial(psi: np.ndarray) -> np.ndarray:
        means = np.array([_spherical_mean(profile, k, float(r), tol) for r in np.sin(psi)])
        return np.sin(psi) ** (k - 1) * np.cos(psi) ** (n - k - 1) * means

    rhs = integrate_adaptive(radial, 0.0, math.pi / 2, tol)
    scale = k * _projection_constant(n, k)
    return IdentityReport.equality(
        lhs.value,
        scale * rhs.value,
        tolerance,
        lhs.error_estimate + scale * rhs.error_estimate,
    )


def verify_inner_integral(
    n: int, rho: float, alpha: float, x: float, tol: float = 1e-13, tolerance: float = 1e-10
) -> IdentityReport:
    """Integral over the chord y in (-sqrt(1-x^2), sqrt(1-x^2)) in closed hypergeometric form

    The chord integral is taken after y = sqrt(1 - x^2) sin(t).
    """
    ProblemPoint(n, rho, alpha).validate()
    if not -1 < x < 1:
        raise EDomainError("Chord abscissa must satisfy -1 < x < 1", x=x)
    q = 1.0 - x * x
    cos_a, sin_a = math.cos(alpha), math.sin(alpha)

    def chord(t: np.ndarray) -> np.ndarray:
        base = 1.0 - 2 * rho * x * cos_a - 2 * rho * math.sqrt(q) * np.sin(t) * sin_a + rho * rho
        return q ** ((n - 3) / 2) * np.cos(t) ** (n - 3) * base ** (1.0 - n / 2)

    lhs = integrate_adaptive(chord, -math.pi / 2, math.pi / 2, tol)
    xs = np.array([x])
    rhs = (
        beta(0.5, n / 2 - 1)
        * q ** ((n - 3) / 2)
        * float(kernel_base(rho, alpha, xs)[0]) ** (1.0 - n / 2)
        * float(hypergeometric_factor(n, rho, alpha, xs)[0])
    )
    return IdentityReport.equality(
        lhs.value, rhs, tolerance * max(1.0, abs(rhs)), lhs.error_estimate
    )


class ExtremalSample(NamedTuple):
    """Extremal function u* at rho e_1 +- h l_alpha and its central difference"""

    forward: float
    backward: float
    error_estimate: float
    derivative: float

    @property
    def bounded(self) -> bool:
        """|u*| <= 1 at both points up to the quadrature error"""
        limit = 1.0 + self.error_estimate + BOUND_SLACK
        return abs(self.forward) <= limit and abs(self.backward) <= limit


def extremal_sample(
    pt: ProblemPoint, h: float = 1e-3, refinement: int = EXTREMAL_REFINEMENT
) -> ExtremalSample:
    """Values of the extremal function on both sides of rho e_1 along l_alpha

    The extremal function is the Poisson integral u*(x) of the boundary data
    f*(zeta) = sign(<grad_x P(rho e_1, zeta), l_alpha>), which jumps on the circle where the
    gradient plane meets the sphere. Its derivative along l_alpha attains the sharp constant.
    """
    pt.validate()
    if not MIN_STEP <= h <= MAX_STEP:
        raise EDomainError(f"Step must lie in [{MIN_STEP}, {MAX_STEP}]", h=h)
    if not pt.rho + h < 1:
        raise EDomainError("Shifted points must stay inside the ball", rho=pt.rho, h=h)
    n = pt.n
    plane = GradientPlane.at(pt)
    l1, l2 = math.cos(pt.alpha), math.sin(pt.alpha)

    def u_star(step: float) -> QuadratureResult:
        x1, x2 = pt.rho + step * l1, step * l2
        p1, p2 = plane.frame.project(x1, x2)
        scale = 1.0 - x1 * x1 - x2 * x2

        def integrand(eta: np.ndarray) -> np.ndarray:
            dist2 = 1.0 + x1 * x1 + x2 * x2 - 2.0 * (p1 * eta[:, 0] + p2 * eta[:, 1])
            return scale * np.sign(plane.norm * eta[:, 0] - plane.offset) / dist2 ** (n / 2)

        return sphere_integral(
            integrand, n, refinement, polar_breakpoints=(plane.kink,), active_dims=2
        )

    forward, backward = u_star(h), u_star(-h)
    error = forward.error_estimate + backward.error_estimate
    if error > h * h:
        logger.warning(
            "Extremal function quadrature error %.3g exceeds h^2 = %.3g at %s",
            error,
            h * h,
            tuple(pt),
        )
    return ExtremalSample(
        forward.value, backward.value, error, (forward.value - backward.value) / (2 * h)
    )


def extremal_derivative(
    pt: ProblemPoint, h: float = 1e-3, refinement: int = EXTREMAL_REFINEMENT
) -> float:
    """Directional derivative of the extremal function at rho e_1 by central differences

    :raise EAccuracyError: If u* leaves [-1, 1] at a shifted point, which a Poisson average
        of +-1 data cannot do
    """
    sample = extremal_sample(pt, h, refinement)
    if not sample.bounded:
        logger.error(
            "Extremal function out of [-1, 1] at %s: %.17g, %.17g",
            tuple(pt),
            sample.forward,
            sample.backward,
        )
        raise EAccuracyError(
            "Extremal function exceeds the bound |u*| <= 1",
            partial_value=sample.derivative,
            forward=sample.forward,
            backward=sample.backward,
        )
    return sample.derivative
