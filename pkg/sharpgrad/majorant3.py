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
"""Majorant of the directional constant in dimension 3 and the proof that it peaks at alpha = 0

With c = cos(alpha) and t = c^2 the scaled constant (2 (1 - rho^2) / 3) C(rho e_1, l_alpha) is
bounded by S + sqrt(S1 S2) <= M = S + S1/3 + 3 S2/4, and M is the power series
T(t) = T(0) + sum_k a_k(rho) t^k. All a_k with k >= 2 are negative, so T is concave, and
T'(1) >= 0, so T increases on [0, 1] and its maximum T(1) is the radial constant. The slope
is reported in c as :func:`t_prime_at_one`, which is dM/dc = 2 T'(1) at c = 1.
"""
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, NamedTuple, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial
from scipy import special

from .constants import ProblemPoint, directional_constant, radial_constant_closed3
from .exceptions import EAccuracyError, EDomainError
from .identities import s_integrals
from .specfun import exp_or_inf, log_double_factorial, log_gamma

logger = logging.getLogger(__name__)

Number = Union[float, complex, np.ndarray]

# Closed forms are used for cos^2(alpha) >= EPS_C, the series and quadrature below
EPS_C = 0.05
SERIES_TOL = 1e-16
SERIES_MAXTERM = 500
SERIES_TAIL_TERMS = 3
# |rho cos(alpha)| below this: S, S1, S2 and M from their expansions in (rho cos(alpha))^2
SMALL_ARGUMENT = 0.25
SMALL_TERMS = 48
EXTRACTION_RADIUS = 0.5
CHAIN_TOL = 1e-9
# T'(t) below this is reported as decreasing
MONOTONE_TOL = 1e-10
CONCAVITY_SAMPLES = 33


class MajorantBreakdown(NamedTuple):
    """S, S1, S2 at t = cos^2(alpha) and the majorant M = S + S1/3 + 3 S2/4"""

    S: float
    S1: float
    S2: float
    M: float
    t: float


class SeriesCoefficient(NamedTuple):
    k: int
    value: float


class Lemma6Report(NamedTuple):
    """Checks showing a_k(rho) < 0 for one index k >= 2"""

    k: int
    P: float
    Q: float
    R: float
    D: float
    D_octic: float
    combination: float
    phi_quad_min: float
    l_k: float
    d_k: float
    ratio_error: float
    a_k_scaled: float
    a_k_negative: bool
    passed: bool


class ChainLink(NamedTuple):
    """One inequality lhs <= rhs of the majorant chain at a given alpha"""

    alpha: float
    name: str
    lhs: float
    rhs: float
    slack: float
    passed: bool


class ChainReport(NamedTuple):
    """Links of the chain at one radius; ``t_prime_at_one`` is the slope in c, 2 T'(1)"""

    rho: float
    links: List[ChainLink]
    peak: float
    radial_gap: float
    t_prime_at_one: float
    max_second_derivative: float
    min_first_derivative: float
    passed: bool

    @property
    def failures(self) -> List[ChainLink]:
        return [link for link in self.links if not link.passed]


def _check_rho(rho: float, allow_zero: bool = False) -> None:
    low_ok = rho >= 0 if allow_zero else rho > 0
    if not (low_ok and rho < 1):
        raise EDomainError(
            "Radius must satisfy {} rho < 1".format("0 <=" if allow_zero else "0 <"), rho=rho
        )


def _roots(rho: float, c: Number):
    """sqrt(1 + rho^2 - 2 rho c) and sqrt(1 + rho^2 + 2 rho c)"""
    u = 1.0 + rho * rho
    return np.sqrt(u - 2 * rho * c), np.sqrt(u + 2 * rho * c)


def _real(value: Number) -> Number:
    return float(value) if np.ndim(value) == 0 and not np.iscomplexobj(value) else value


def _closed_branch(rho: float, alpha: float) -> bool:
    return math.cos(alpha) ** 2 >= EPS_C


@lru_cache(maxsize=128)
def _small_coefficients(rho: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Coefficients of S, S1 and S2 as power series in p^2, p = rho cos(alpha)

    With u = 1 + rho^2 the roots are sqrt(u) (1 -+ 2p/u)^{1/2}. Expanded binomially, the
    negative powers of p in the closed forms cancel exactly and no coefficient is larger than
    the value it contributes to. The series converge like (2p/u)^{2j}.
    """
    u = 1.0 + rho * rho
    root = math.sqrt(u)
    j = np.arange(SMALL_TERMS + 1)
    # p^{2j} in (sp + sm) / (2 sqrt(u)) and in (1 - 2 p^2/(3u))^{3/2}, p^{2j+1} in
    # (sp - sm) / (2 sqrt(u))
    even = special.binom(0.5, 2 * j) * (4 / (u * u)) ** j
    power = special.binom(1.5, j) * (-2 / (3 * u)) ** j
    odd = special.binom(0.5, 2 * j + 1) * (2 / u) * (4 / (u * u)) ** j
    s = root / 3 * (2 * u * (power[1:] - even[1:]) + 2 * even[:-1] + 2 * odd[:-1])
    # (sqrt(u) - 1) / sqrt(u)
    excess = rho * rho / (root * (root + 1))
    s1 = -2 * root * odd[:-1]
    s1[0] = 2 * excess
    k = j[1:-1]
    s2 = np.zeros(SMALL_TERMS)
    s2[1:] = 2 * root * (
        (10 * rho * rho + 1) / 45 * odd[k]
        - odd[k - 1] / 9
        - 2 * u * u / 15 * odd[k + 1]
        + 2 * u / 15 * even[k + 1]
        - 2 / 9 * even[k]
    )
    s2[0] = 2 / 3 * excess - 2 * rho * rho / 15
    s2[1] += 8 / 45
    return s, s1, s2


def _small_majorant_coefficients(rho: float) -> np.ndarray:
    s, s1, s2 = _small_coefficients(rho)
    return s + s1 / 3 + 0.75 * s2


def _small_parts(rho: float, c: float) -> Tuple[float, float, float]:
    x = (rho * c) ** 2
    s, s1, s2 = (float(polynomial.polyval(x, part)) for part in _small_coefficients(rho))
    return s, s1, s2


def closed_S(rho: float, alpha: float) -> float:
    """Integral of |rho c / 3 - x| / sqrt(1 + rho^2 - 2 rho x c) over [-1, 1]"""
    _check_rho(rho, allow_zero=True)
    if rho == 0:
        return 1.0
    if not _closed_branch(rho, alpha):
        return s_integrals(3, rho, alpha).S
    c = math.cos(alpha)
    if abs(rho * c) < SMALL_ARGUMENT:
        return _small_parts(rho, c)[0]
    u = 1.0 + rho * rho
    r2c2 = (rho * c) ** 2
    sm, sp = _roots(rho, c)
    return float(
        (
            2 * (u - 2 / 3 * r2c2) ** 1.5
            - (u - r2c2 + rho * c) * sm
            - (u - r2c2 - rho * c) * sp
        )
        / (3 * r2c2)
    )


def closed_S1(rho: float, alpha: float) -> float:
    _check_rho(rho, allow_zero=True)
    if rho == 0:
        return 0.0
    if not _closed_branch(rho, alpha):
        return s_integrals(3, rho, alpha).S1
    c = math.cos(alpha)
    if abs(rho * c) < SMALL_ARGUMENT:
        return _small_parts(rho, c)[1]
    sm, sp = _roots(rho, c)
    return float(2 - (sp - sm) / (rho * c))


def closed_S2(rho: float, alpha: float) -> float:
    _check_rho(rho, allow_zero=True)
    if rho == 0:
        return 0.0
    if not _closed_branch(rho, alpha):
        return s_integrals(3, rho, alpha).S2
    c, s = math.cos(alpha), math.sin(alpha)
    if abs(rho * c) < SMALL_ARGUMENT:
        return _small_parts(rho, c)[2]
    u = 1.0 + rho * rho
    sm, sp = _roots(rho, c)
    odd = rho * c / 9 - (10 * rho * rho + 1) / (45 * rho * c) + 2 * u * u / (15 * (rho * c) ** 3)
    even = 2 * u / (15 * (rho * c) ** 2) - 2 / 9
    return float(
        (2 / 3 + 2 * rho * rho / 45) * c * c
        + (2 / 3 - 2 * rho * rho / 15) * s * s
        + odd * (sm - sp)
        + even * (sp + sm)
    )


def majorant_closed(rho: float, c: Number) -> Number:
    """Closed form of S + S1/3 + 3 S2/4 as a function of c = cos(alpha)

    Accepts complex c (and arrays of it); the expression is even in c, so M(sqrt(t)) is an
    analytic function of t near the origin. Where |rho c| < SMALL_ARGUMENT the closed form
    cancels to O(1) from terms of order (rho c)^-2 and its expansion is summed instead.
    """
    _check_rho(rho)
    p = rho * np.asarray(c)
    r2c2 = p * p
    small = np.abs(p) < SMALL_ARGUMENT
    if np.any(small):
        expansion = polynomial.polyval(r2c2, _small_majorant_coefficients(rho))
        if np.all(small):
            return _real(expansion)
    u = 1.0 + rho * rho
    sm, sp = _roots(rho, c)
    with np.errstate(divide="ignore", invalid="ignore"):
        value = (
            2 * (u - 2 / 3 * r2c2) ** 1.5 / (3 * r2c2)
            + 7 / 6
            - rho * rho / 10
            + 2 * r2c2 / 15
            + (1 / 6 - 7 * u / (30 * r2c2)) * (sm + sp)
            + (p / 12 - (10 * rho * rho + 1) / (60 * p) + u * u / (10 * p * r2c2)) * (sm - sp)
        )
    if np.any(small):
        value = np.where(small, expansion, value)
    return _real(value)


def majorant_dc(rho: float, c: float) -> float:
    """Derivative of :func:`majorant_closed` with respect to c"""
    _check_rho(rho)
    if not 0 < c <= 1:
        raise EDomainError("Derivative requires 0 < c <= 1", c=c)
    if rho * c < SMALL_ARGUMENT:
        slope = polynomial.polyder(_small_majorant_coefficients(rho))
        return float(2 * rho * rho * c * polynomial.polyval((rho * c) ** 2, slope))
    u = 1.0 + rho * rho
    r2c2 = (rho * c) ** 2
    sm, sp = _roots(rho, c)
    g = u - 2 / 3 * r2c2
    d_power = -4 / 3 * math.sqrt(g) * (u + r2c2 / 3) / (rho * rho * c**3)
    d_square = 4 * rho * rho * c / 15
    even = 1 / 6 - 7 * u / (30 * r2c2)
    d_even = 7 * u / (15 * rho * rho * c**3) * (sm + sp) + even * (rho / sp - rho / sm)
    odd = rho * c / 12 - (10 * rho * rho + 1) / (60 * rho * c) + u * u / (10 * (rho * c) ** 3)
    odd_dc = rho / 12 + (10 * rho * rho + 1) / (60 * rho * c * c) - 3 * u * u / (
        10 * rho**3 * c**4
    )
    d_odd = odd_dc * (sm - sp) - odd * (rho / sm + rho / sp)
    return float(d_power + d_square + d_even + d_odd)


def series_constant_term(rho: float) -> float:
    """T(0) = 7/6 - rho^2/10 - 1/(6 sqrt(1 + rho^2))"""
    return 7 / 6 - rho * rho / 10 - 1 / (6 * math.sqrt(1 + rho * rho))


def quartic_coefficients(k: int) -> Tuple[Fraction, Fraction, Fraction]:
    """P(k), Q(k), R(k) of the a_k bracket -(1+rho^2)^2 P + (1+rho^2) Q + R, exact"""
    p = Fraction(8, 3) * k**4 + 8 * k**3 + Fraction(22, 3) * k**2 + 2 * k
    q = Fraction(32, 3) * k**4 + 8 * k**3 - Fraction(68, 3) * k**2 - 8 * k + 12
    r = Fraction(-32, 3) * k**4 + 16 * k**3 - Fraction(70, 3) * k**2 + 17 * k - 3
    return p, q, r


def _bracket(k: int, rho: float) -> float:
    """-(1+rho^2)^2 P(k) + (1+rho^2) Q(k) + R(k) collected in powers of k

    The k^4 and k^3 coefficients carry the factor rho^2 - 1 exactly, so the bracket keeps its
    digits near rho = 1 where it drops from O(k^4) to O(k^2).
    """
    u = 1.0 + rho * rho
    v = (rho - 1) * (rho + 1)
    return (
        -8 / 3 * v * v * k**4
        - 8 * v * (u + 1) * k**3
        - (22 * u * u + 68 * u + 70) / 3 * k**2
        - (2 * u * u + 8 * u - 17) * k
        + 12 * u
        - 3
    )


def _log_scaled(k: int, rho: float) -> Tuple[float, float]:
    """Sign and log of the modulus of the scaled coefficient; finite for every k >= 2"""
    u = 1.0 + rho * rho
    log_head = (
        log_double_factorial(4 * k - 5)
        - log_gamma(2 * k + 4)
        + k * math.log(3)
        - (k + 1) * math.log(u)
    )
    log_tail = math.log(2 / 3) + log_double_factorial(2 * k - 3) - log_gamma(k + 2)
    combined = _bracket(k, rho) + math.exp(log_tail - log_head)
    if combined == 0:
        return 0.0, -math.inf
    return math.copysign(1.0, combined), log_head + math.log(abs(combined))


def coefficient_a_scaled(k: int, rho: float) -> float:
    """a_k(rho) rho^{-2k} 3^k (1 + rho^2)^{k - 1/2} for k >= 2; same sign as a_k, never
    underflows

    :raise EAccuracyError: If the value leaves the float range, which happens for k of a few
        hundred
    """
    if k < 2:
        raise EDomainError("Scaled coefficient is defined for k >= 2", k=k)
    _check_rho(rho)
    sign, log_abs = _log_scaled(k, rho)
    value = sign * exp_or_inf(log_abs)
    if math.isinf(value):
        raise EAccuracyError(
            "Scaled coefficient exceeds the float range", partial_value=value, terms=k
        )
    return value


def coefficient_a(k: int, rho: float) -> SeriesCoefficient:
    """Coefficient a_k(rho) of t^k in T(t)

    a_1 has its own formula. For k >= 2 the scaled coefficient and the scale are combined in
    log space, so a_k is finite for every k and underflows to 0 for small rho.
    """
    _check_rho(rho)
    if k < 1:
        raise EDomainError("Series coefficients start at k = 1", k=k)
    u = 1.0 + rho * rho
    if k == 1:
        value = rho * rho * (2 / 15 - 1 / (18 * math.sqrt(u)) - 1 / (30 * u**2.5))
        return SeriesCoefficient(1, value)
    sign, log_abs = _log_scaled(k, rho)
    log_scale = 2 * k * math.log(rho) - k * math.log(3) + (0.5 - k) * math.log(u)
    return SeriesCoefficient(k, sign * math.exp(log_abs + log_scale))


def coefficient_a_binomial(k: int, rho: float) -> float:
    """a_k(rho) straight from the binomial expansions of the square roots in the closed
    majorant"""
    _check_rho(rho)
    if k < 1:
        raise EDomainError("Series coefficients start at k = 1", k=k)
    u = 1.0 + rho * rho
    s = math.sqrt(u)
    q = 2 * rho * rho / (3 * u)
    p = 2 * rho / u
    value = (
        4 * s / 9 * special.binom(1.5, k + 1) * (-1) ** (k + 1) * q**k
        + s / 3 * special.binom(0.5, 2 * k) * p ** (2 * k)
        - 28 / (15 * s) * special.binom(0.5, 2 * k + 2) * p ** (2 * k)
        + (10 * rho * rho + 1) / (15 * s) * special.binom(0.5, 2 * k + 1) * p ** (2 * k)
        - rho * s / 6 * special.binom(0.5, 2 * k - 1) * p ** (2 * k - 1)
        - 8 / (5 * s) * special.binom(0.5, 2 * k + 3) * p ** (2 * k)
    )
    if k == 1:
        value += 2 * rho * rho / 15
    return float(value)


def _sum_series(
    t: float, rho: float, order: int, tol: float, strict: bool, maxterms: int
) -> float:
    """sum_{k >= max(order, 1)} k (k-1) ... (k-order+1) a_k t^{k-order}"""
    total, small = 0.0, 0
    for k in range(max(order, 1), maxterms + 1):
        falling = math.prod(range(k - order + 1, k + 1))
        term = falling * coefficient_a(k, rho).value * t ** (k - order)
        total += term
        small = small + 1 if abs(term) <= tol * abs(total) else 0
        if small >= SERIES_TAIL_TERMS:
            return total
    if strict:
        raise EAccuracyError(
            "Majorant series did not converge within the term cap",
            partial_value=total,
            terms=maxterms,
        )
    logger.debug("Majorant series truncated at %d terms (t=%g, rho=%g)", maxterms, t, rho)
    return total


def _check_t(t: float) -> None:
    if not 0 <= t <= 1:
        raise EDomainError("Series variable must satisfy 0 <= t <= 1", t=t)


def majorant_series_T(t: float, rho: float, tol: float = SERIES_TOL) -> float:
    """T(t) = T(0) + sum_{k >= 1} a_k(rho) t^k

    :raise EAccuracyError: If the terms do not fall below ``tol`` relative within the cap
    """
    _check_t(t)
    _check_rho(rho)
    constant = series_constant_term(rho)
    if t == 0:
        return constant
    total, small = constant, 0
    for k in range(1, SERIES_MAXTERM + 1):
        term = coefficient_a(k, rho).value * t**k
        total += term
        small = small + 1 if abs(term) <= tol * abs(total) else 0
        if small >= SERIES_TAIL_TERMS:
            return total
    raise EAccuracyError(
        "Majorant series did not converge within the term cap",
        partial_value=total,
        terms=SERIES_MAXTERM,
    )


def majorant_series_derivative(
    t: float,
    rho: float,
    order: int = 1,
    tol: float = SERIES_TOL,
    strict: bool = True,
    maxterms: int = SERIES_MAXTERM,
) -> float:
    """Derivative of the given order of T(t) by term-wise differentiation

    With ``strict`` off the partial sum at the term cap ``maxterms`` is returned instead of
    raising. Near rho = 1 the series at t = 1 needs thousands of terms, the singularity of T
    sits at t = (1 + rho^2)^2 / (4 rho^2).
    """
    _check_t(t)
    _check_rho(rho)
    if order < 1:
        raise EDomainError("Derivative order must be positive", order=order)
    return _sum_series(t, rho, order, tol, strict, maxterms)


def majorant_dt(rho: float, t: float) -> float:
    """T'(t) from the closed form where it is accurate, from the series near t = 0"""
    _check_t(t)
    if t >= EPS_C:
        c = math.sqrt(t)
        return majorant_dc(rho, c) / (2 * c)
    return majorant_series_derivative(t, rho, 1)


def majorant(rho: float, alpha: float) -> MajorantBreakdown:
    """S, S1, S2 and the majorant at alpha

    Closed forms for cos^2(alpha) >= EPS_C; below it S, S1, S2 come from quadrature and M from
    the power series, whose closed form loses every digit as alpha approaches pi/2.
    """
    _check_rho(rho, allow_zero=True)
    t = math.cos(alpha) ** 2
    if rho == 0:
        return MajorantBreakdown(1.0, 0.0, 0.0, 1.0, t)
    if t >= EPS_C:
        return MajorantBreakdown(
            closed_S(rho, alpha),
            closed_S1(rho, alpha),
            closed_S2(rho, alpha),
            majorant_closed(rho, math.cos(alpha)),
            t,
        )
    logger.debug("Series majorant at rho=%g, alpha=%g (t=%.3g)", rho, alpha, t)
    parts = s_integrals(3, rho, alpha)
    return MajorantBreakdown(parts.S, parts.S1, parts.S2, majorant_series_T(t, rho), t)


def extract_series_coefficients(
    rho: float, count: int, radius: float = EXTRACTION_RADIUS
) -> List[float]:
    """Taylor coefficients T(0), a_1, ..., a_{count-1} of the closed majorant

    Discrete Cauchy integral: M(sqrt(t)) is sampled on the circle |t| = radius and transformed
    with the FFT. Independent of the coefficient formulas.
    """
    _check_rho(rho)
    if count < 1:
        raise EDomainError("At least one coefficient must be requested", count=count)
    samples = max(64, 4 * count)
    t = radius * np.exp(2j * np.pi * np.arange(samples) / samples)
    values = majorant_closed(rho, np.sqrt(t))
    coefficients = np.fft.fft(values) / samples
    return [float(coefficients[k].real / radius**k) for k in range(count)]


def lemma6_report(rho: float, k: int) -> Lemma6Report:
    """Negativity certificate of a_k(rho), k >= 2

    The bracket is written as Phi(y) with y = 1 + rho^2 in [1, 2]; Phi' has the sign of a
    quadratic with negative discriminant, so Phi(y) <= Phi(2), and Phi(2) < 0 reduces to
    l_k > d_k, where d_k decreases and l_k grows from k = 3 on.

    The polynomial checks run in exact rational arithmetic, the discriminant cancels from
    O(k^10) to O(k^8). l_k and the scaled coefficient are compared in log space and reported
    as ``math.inf`` in magnitude once they leave the float range.
    """
    if k < 2:
        raise EDomainError("Negativity is claimed for k >= 2", k=k)
    _check_rho(rho)
    p, q, r = quartic_coefficients(k)
    discriminant = k * k * q * q + 4 * (k * k - 1) * p * r
    octic = (
        Fraction(-3200, 9) * k**8
        - 544 * k**7
        + Fraction(5824, 9) * k**6
        + 952 * k**5
        - Fraction(3488, 9) * k**4
        - 432 * k**3
        + 96 * k**2
        + 24 * k
    )

    def quad(y: Fraction) -> Fraction:
        return (k - 1) * p * y * y - k * q * y - (k + 1) * r

    candidates = [Fraction(1), Fraction(2)]
    vertex = k * q / (2 * (k - 1) * p)
    if 1 < vertex < 2:
        candidates.append(vertex)
    phi_min = min(quad(y) for y in candidates)

    def log_l(j: int) -> float:
        return (
            log_double_factorial(4 * j - 5)
            + log_gamma(j + 2)
            - log_double_factorial(2 * j - 3)
            - log_gamma(2 * j + 4)
            + (j + 1) * math.log(1.5)
        )

    d_k = 2 / (98 * k * k + 7 * k - 21)
    ratio = (
        3 * (4 * k - 1) * (4 * k - 3) * (k + 2) / (2 * (2 * k + 5) * (2 * k + 4) * (2 * k - 1))
    )
    ratio_error = abs(math.exp(log_l(k + 1) - log_l(k)) - ratio) / ratio
    sign, log_scaled = _log_scaled(k, rho)
    checks = (
        discriminant < 0,
        discriminant == octic,
        phi_min > 0,
        log_l(k) > math.log(d_k),
        ratio_error <= 1e-12 * max(1.0, abs(log_l(k))),
        sign < 0,
    )
    return Lemma6Report(
        k,
        float(p),
        float(q),
        float(r),
        float(discriminant),
        float(octic),
        float(-4 * p + 2 * q + r),
        float(phi_min),
        exp_or_inf(log_l(k)),
        d_k,
        ratio_error,
        sign * exp_or_inf(log_scaled),
        sign < 0,
        all(checks),
    )


def lemma6_verify(rho: float, kmax: int) -> List[Lemma6Report]:
    """:func:`lemma6_report` for every k in [2, kmax]"""
    _check_rho(rho)
    if kmax < 2:
        raise EDomainError("kmax must be at least 2", kmax=kmax)
    return [lemma6_report(rho, k) for k in range(2, kmax + 1)]


def t_prime_at_one(rho: float) -> float:
    """(1/(30 rho^2)) (-40 (1 + 4 rho^2/3) sqrt(1 + rho^2/3) + 11 rho^4 + 60 rho^2 + 40)

    The derivative dM/dc of the closed majorant in c = cos(alpha) at c = 1. As t = c^2 this is
    twice the series slope: t_prime_at_one(rho) = 2 T'(1). Nonnegative. Below SMALL_ARGUMENT
    the bracket cancels to O(rho^4) and the expansion of :func:`majorant_dc` is used.
    """
    _check_rho(rho)
    if rho < SMALL_ARGUMENT:
        return majorant_dc(rho, 1.0)
    r2 = rho * rho
    return (-40 * (1 + 4 / 3 * r2) * math.sqrt(1 + r2 / 3) + 11 * r2 * r2 + 60 * r2 + 40) / (
        30 * r2
    )


def _link(alpha: float, name: str, lhs: float, rhs: float, tol: float) -> ChainLink:
    slack = rhs - lhs
    return ChainLink(alpha, name, lhs, rhs, slack, bool(slack >= -tol))


def conjecture_chain(
    rho: float, alphas: Iterable[float], tol: float = CHAIN_TOL, quad_tol: float = 1e-11
) -> ChainReport:
    """Checks every inequality from the directional constant to the radial constant

    At each alpha: (2(1-rho^2)/3) C(rho e_1, l_alpha) <= S + sqrt(S1 S2) <= M(alpha) <= T(1),
    then (3/(2(1-rho^2))) T(1) equals the closed radial constant. T'' <= 0 and T' >= 0 are
    sampled on [0, 1].
    """
    _check_rho(rho)
    peak = majorant_closed(rho, 1.0)
    scale = 3 / (2 * (1 - rho * rho))
    radial = radial_constant_closed3(rho)
    radial_gap = abs(scale * peak - radial)
    links: List[ChainLink] = []
    for alpha in alphas:
        estimate = directional_constant(ProblemPoint(3, rho, alpha), quad_tol)
        parts = majorant(rho, alpha)
        cauchy_schwarz = parts.S + math.sqrt(max(parts.S1, 0.0) * max(parts.S2, 0.0))
        links.append(
            _link(alpha, "constant<=cauchy_schwarz", estimate.value / scale, cauchy_schwarz, tol)
        )
        links.append(_link(alpha, "cauchy_schwarz<=majorant", cauchy_schwarz, parts.M, tol))
        links.append(_link(alpha, "majorant<=peak", parts.M, peak, tol))
    samples = np.linspace(0.0, 1.0, CONCAVITY_SAMPLES)
    second = max(majorant_series_derivative(float(t), rho, 2, strict=False) for t in samples)
    first = min(majorant_dt(rho, float(t)) for t in samples)
    slope = t_prime_at_one(rho)
    passed = (
        all(link.passed for link in links)
        and radial_gap <= tol * max(1.0, radial)
        and second <= 0
        and first >= -MONOTONE_TOL
        and slope >= 0
    )
    report = ChainReport(rho, links, peak, radial_gap, slope, second, first, passed)
    for link in report.failures:
        logger.error(
            "Chain link %s fails at rho=%g, alpha=%g: %.17g > %.17g",
            link.name,
            rho,
            link.alpha,
            link.lhs,
            link.rhs,
        )
    return report
