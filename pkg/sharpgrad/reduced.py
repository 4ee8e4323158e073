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
"""Reduced one-dimensional integrals over x in [-1, 1] with the Gegenbauer-type weight
(1 - x^2)^{(n-3)/2}, evaluated in the variable theta = arccos(x)"""
import math
from typing import Callable, Sequence

import numpy as np

from .quadrature import QuadratureResult, integrate_adaptive
from .specfun import Hyp2F1Args, hyp2f1_logcase, hyp2f1_minus_one, log_gamma

XFunction = Callable[[np.ndarray], np.ndarray]


def alpha_shift(n: int, rho: float) -> float:
    """Shifted center alpha_rho = (n - 2) rho / n"""
    return (n - 2) * rho / n


def kernel_base(rho: float, alpha: float, x: np.ndarray) -> np.ndarray:
    """1 + rho^2 - 2 rho x cos(alpha)"""
    return 1.0 + rho * rho - 2.0 * rho * x * math.cos(alpha)


def hyp_argument(rho: float, alpha: float, x: np.ndarray) -> np.ndarray:
    """Argument 4 rho^2 sin^2(alpha) (1 - x^2) / (1 + rho^2 - 2 rho x cos(alpha))^2 of the
    hypergeometric factor; always in [0, 1) for rho < 1"""
    base = kernel_base(rho, alpha, x)
    z = 4.0 * (rho * math.sin(alpha)) ** 2 * (1.0 - x * x) / (base * base)
    return np.clip(z, 0.0, None)


def hypergeometric_factor(n: int, rho: float, alpha: float, x: np.ndarray) -> np.ndarray:
    """2F1((n-2)/4, n/4; (n-1)/2; z(x)) on an array of x"""
    return hyp2f1_logcase(Hyp2F1Args.for_dimension(n, hyp_argument(rho, alpha, x)))


def hypergeometric_excess(n: int, rho: float, alpha: float, x: np.ndarray) -> np.ndarray:
    """2F1(...; z(x)) - 1 without cancellation for small arguments"""
    return hyp2f1_minus_one(Hyp2F1Args.for_dimension(n, hyp_argument(rho, alpha, x)))


def representation_prefactor(n: int, rho: float) -> float:
    """n / (1 - rho^2) * Gamma(n/2) / (Gamma(1/2) Gamma((n-1)/2))"""
    return (
        n
        / (1.0 - rho * rho)
        * math.exp(log_gamma(n / 2) - log_gamma(0.5) - log_gamma((n - 1) / 2))
    )


def gegenbauer_integral(
    n: int, h: XFunction, tol: float, kinks: Sequence[float] = ()
) -> QuadratureResult:
    """Integral of h(x) (1 - x^2)^{(n-3)/2} over [-1, 1]

    Computed as the integral of h(cos(theta)) sin^{n-2}(theta) over [0, pi], which is smooth
    at the endpoints for every n >= 3. ``kinks`` are x-positions of kinks of h.
    """

    def integrand(theta: np.ndarray) -> np.ndarray:
        return h(np.cos(theta)) * np.sin(theta) ** (n - 2)

    breakpoints = [math.acos(x) for x in kinks if -1 < x < 1]
    return integrate_adaptive(integrand, 0.0, math.pi, tol, breakpoints)


def representation_integral(n: int, rho: float, alpha: float, tol: float) -> QuadratureResult:
    """Integral of |alpha_rho cos(alpha) - x| (1-x^2)^{(n-3)/2} D^{1-n/2} 2F1(z) over [-1, 1]"""
    kink = alpha_shift(n, rho) * math.cos(alpha)

    def h(x: np.ndarray) -> np.ndarray:
        return (
            np.abs(kink - x)
            * kernel_base(rho, alpha, x) ** (1.0 - n / 2)
            * hypergeometric_factor(n, rho, alpha, x)
        )

    return gegenbauer_integral(n, h, tol, [kink])
