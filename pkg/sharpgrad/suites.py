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
"""Verification suites run by ``gradbound verify``

A suite is a function of :class:`SuiteOptions` returning one :class:`CaseResult` per checked
case. Suites subscribe to the registry with the :meth:`SuiteRegistry.suite` decorator and are
run in the order of registration.
"""
import logging
import math
from fractions import Fraction
from functools import partial
from typing import Callable, Dict, List, NamedTuple, Sequence

import numpy as np

from .dispatch import GridDispatcher
from .exceptions import EAccuracyError, EDomainError
from .identities import IdentityReport, lemma3_sides, lemma4_sides, lemma5_value
from .majorant3 import (
    conjecture_chain,
    lemma6_verify,
    majorant_series_derivative,
    t_prime_at_one,
)
from .oracle import TEST_FUNCTIONS, verify_inner_integral, verify_projection_lemma

logger = logging.getLogger(__name__)

DIMENSIONS = (3, 4, 5, 6)
RADII = (0.1, 0.3, 0.5, 0.7, 0.9)
ANGLES = (0.0, math.pi / 6, math.pi / 3, math.pi / 2)
PROJECTION_CASES = ((3, 1), (3, 2), (4, 2), (5, 2))
INNER_CASES = 12
INNER_SEED = 20260
COEFFICIENT_RADII = tuple(round(0.05 * j, 2) for j in range(1, 20))
SLOPE_RADII = tuple(round(0.01 * j, 2) for j in range(1, 100))
SERIES_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
# Terms of the slope series at t = 1, about 3300 are needed at rho = 0.9
SERIES_SLOPE_TERMS = 20000
CHAIN_ANGLES = 33
LEMMA5_TOL = 1e-9
SERIES_SLOPE_TOL = 1e-8
OCTIC_TOL = 1e-10


class SuiteOptions(NamedTuple):
    dimensions: Sequence[int] = DIMENSIONS
    kmax: int = 200
    tolerance: float = 1e-9
    jobs: int = 1


class CaseResult(NamedTuple):
    """Outcome of one checked case; ``gap`` is the violation measure compared to tolerance"""

    suite: str
    inputs: dict
    gap: float
    passed: bool


Suite = Callable[[SuiteOptions], List[CaseResult]]


class SuiteRegistry:
    """Ordered name -> suite mapping"""

    def __init__(self):
        self.suites: Dict[str, Suite] = {}

    def suite(self, name: str) -> Callable[[Suite], Suite]:
        """Decorator that subscribes a function to the registry under ``name``"""

        def decorator(f: Suite) -> Suite:
            self.suites[name] = f
            return f

        return decorator

    @property
    def names(self) -> List[str]:
        return list(self.suites)

    def run(self, name: str, options: SuiteOptions) -> List[CaseResult]:
        """Runs the named suite, or all of them for ``all``"""
        if name == "all":
            suites = list(self.suites.values())
        elif name in self.suites:
            suites = [self.suites[name]]
        else:
            raise EDomainError(
                f"Unknown suite, expected one of {', '.join(self.names + ['all'])}", suite=name
            )
        results = [case for suite in suites for case in suite(options)]
        for case in results:
            if not case.passed:
                logger.error("Suite %s fails at %s (gap %.3g)", case.suite, case.inputs, case.gap)
        return results


registry = SuiteRegistry()


def _from_report(suite: str, inputs: dict, report: IdentityReport) -> CaseResult:
    return CaseResult(suite, inputs, report.abs_gap, report.passed)


def _grid(options: SuiteOptions) -> List[tuple]:
    return [(n, rho, alpha) for n in options.dimensions for rho in RADII for alpha in ANGLES]


def _identity_suite(name: str, check: Callable, options: SuiteOptions) -> List[CaseResult]:
    points = _grid(options)
    reports = GridDispatcher(options.jobs).map(check, points)
    return [
        _from_report(name, {"n": n, "rho": rho, "alpha": alpha}, report)
        for (n, rho, alpha), report in zip(points, reports)
    ]


def _lemma3_case(tolerance: float, point: tuple) -> IdentityReport:
    return lemma3_sides(*point, tolerance=tolerance)


def _lemma4_case(tolerance: float, point: tuple) -> IdentityReport:
    return lemma4_sides(*point, tolerance=tolerance)


def _lemma5_case(tolerance: float, point: tuple) -> IdentityReport:
    return lemma5_value(*point, tolerance=tolerance)


def inner_integral_cases(count: int = INNER_CASES, seed: int = INNER_SEED) -> List[tuple]:
    """Reproducible pseudo-random (n, rho, alpha, x) tuples"""
    rng = np.random.default_rng(seed)
    return [
        (
            int(rng.integers(3, 7)),
            float(rng.uniform(0.0, 0.95)),
            float(rng.uniform(0.0, math.pi / 2)),
            float(rng.uniform(-0.95, 0.95)),
        )
        for _ in range(count)
    ]


@registry.suite("lemma1")
def projection_suite(options: SuiteOptions) -> List[CaseResult]:
    return [
        _from_report(
            "lemma1",
            {"test_fn": name, "n": n, "k": k},
            verify_projection_lemma(name, n, k, tolerance=options.tolerance),
        )
        for name in TEST_FUNCTIONS
        for n, k in PROJECTION_CASES
        if n in options.dimensions
    ]


@registry.suite("lemma2")
def inner_integral_suite(options: SuiteOptions) -> List[CaseResult]:
    return [
        _from_report(
            "lemma2",
            {"n": n, "rho": rho, "alpha": alpha, "x": x},
            verify_inner_integral(n, rho, alpha, x),
        )
        for n, rho, alpha, x in inner_integral_cases()
        if n in options.dimensions
    ]


@registry.suite("lemma3")
def lemma3_suite(options: SuiteOptions) -> List[CaseResult]:
    return _identity_suite("lemma3", partial(_lemma3_case, options.tolerance), options)


@registry.suite("lemma4")
def lemma4_suite(options: SuiteOptions) -> List[CaseResult]:
    return _identity_suite("lemma4", partial(_lemma4_case, options.tolerance), options)


@registry.suite("lemma5")
def lemma5_suite(options: SuiteOptions) -> List[CaseResult]:
    tolerance = min(options.tolerance, LEMMA5_TOL)
    return _identity_suite("lemma5", partial(_lemma5_case, tolerance), options)


@registry.suite("lemma6")
def coefficient_suite(options: SuiteOptions) -> List[CaseResult]:
    results = []
    for rho in COEFFICIENT_RADII:
        reports = lemma6_verify(rho, options.kmax)
        failed = [r.k for r in reports if not r.passed]
        worst = max(r.a_k_scaled for r in reports)
        results.append(
            CaseResult(
                "lemma6",
                {"rho": rho, "kmax": options.kmax, "failed_k": failed},
                max(worst, 0.0),
                not failed,
            )
        )
    return results


def octic_identity_gap(rho: float) -> float:
    """Relative gap of the polynomial identity that makes the boundary slope nonnegative

    Evaluated in exact rational arithmetic at the binary value of rho.
    """
    r2 = Fraction(rho) ** 2
    lhs = (11 * r2 * r2 + 60 * r2 + 40) ** 2 - 1600 * (1 + Fraction(4, 3) * r2) ** 2 * (1 + r2 / 3)
    rhs = 121 * r2**4 + Fraction(10040, 27) * r2**3 + Fraction(640, 3) * r2**2
    return float(abs(lhs - rhs) / rhs)


def _series_slope_case(rho: float) -> CaseResult:
    """Twice the term-wise slope of T at t = 1 against the closed slope in c"""
    inputs = {"rho": rho, "check": "series"}
    try:
        series = majorant_series_derivative(1.0, rho, 1, maxterms=SERIES_SLOPE_TERMS)
    except EAccuracyError as exc:
        logger.warning("Slope series at rho=%g: %s after %d terms", rho, exc, exc.terms)
        return CaseResult("lemma7", dict(inputs, partial=exc.partial_value), math.inf, False)
    gap = abs(2 * series - t_prime_at_one(rho))
    return CaseResult("lemma7", inputs, gap, gap <= SERIES_SLOPE_TOL)


@registry.suite("lemma7")
def slope_suite(options: SuiteOptions) -> List[CaseResult]:
    results = []
    for rho in SLOPE_RADII:
        slope = t_prime_at_one(rho)
        octic = octic_identity_gap(rho)
        results.append(
            CaseResult(
                "lemma7",
                {"rho": rho, "check": "slope", "t_prime_at_one": slope},
                max(-slope, 0.0),
                slope >= 0,
            )
        )
        results.append(
            CaseResult("lemma7", {"rho": rho, "check": "octic"}, octic, octic <= OCTIC_TOL)
        )
    for rho in SERIES_RADII:
        results.append(_series_slope_case(rho))
    return results


def _chain_case(tolerance: float, rho: float) -> CaseResult:
    alphas = np.linspace(0.0, math.pi / 2, CHAIN_ANGLES)
    report = conjecture_chain(rho, [float(a) for a in alphas], tolerance)
    worst = max([-link.slack for link in report.links] + [report.radial_gap])
    return CaseResult(
        "chain",
        {"rho": rho, "failures": [f"{f.name}@{f.alpha:.6g}" for f in report.failures]},
        max(worst, 0.0),
        report.passed,
    )


@registry.suite("chain")
def chain_suite(options: SuiteOptions) -> List[CaseResult]:
    return GridDispatcher(options.jobs).map(
        partial(_chain_case, options.tolerance), list(COEFFICIENT_RADII)
    )
