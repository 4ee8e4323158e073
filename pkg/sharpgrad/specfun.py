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
"""Scalar special functions: log-gamma, digamma, Beta, Pochhammer, double factorial
and the Gauss hypergeometric function in the logarithmic case c = a + b"""
import logging
import math
from typing import NamedTuple, Union

import numpy as np
from scipy import special

from .exceptions import EAccuracyError, EDomainError

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

# Switch from the direct Gauss series to the connection formula at 1 - z
HYP2F1_CROSSOVER = 0.75
HYP2F1_MAXTERM = 100000
HYP2F1_TOL = 1e-16
# Consecutive small terms required before a series is considered summed
HYP2F1_TAIL_TERMS = 3

# Exact products up to this argument, log-space above
DOUBLE_FACTORIAL_EXACT_MAX = 150


class Hyp2F1Args(NamedTuple):
    """Parameters and argument of 2F1(a, b; c; z)

    In the logarithmic case used throughout the package ``c == a + b``. The argument ``z`` may
    be a scalar or a numpy array, in which case every evaluator is vectorized over it.
    """

    a: float
    b: float
    c: float
    z: ArrayLike

    @classmethod
    def for_dimension(cls, n: int, z: ArrayLike) -> "Hyp2F1Args":
        """Parameters ((n-2)/4, n/4; (n-1)/2) of the hypergeometric factor in dimension n"""
        return cls((n - 2) / 4, n / 4, (n - 1) / 2, z)


def exp_or_inf(x: float) -> float:
    """exp(x), math.inf where it leaves the float range"""
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0"""
    if not x > 0:
        raise EDomainError("log_gamma() requires a positive argument", x=x)
    return float(special.gammaln(x))


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0"""
    if not x > 0:
        raise EDomainError("digamma() requires a positive argument", x=x)
    return float(special.psi(x))


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1"""
    if k < 0:
        raise EDomainError("pochhammer() requires a nonnegative index", a=a, k=k)
    return float(math.prod(a + j for j in range(k)))


def log_double_factorial(m: int) -> float:
    """ln(m!!) for m >= -1 via the Gamma function identities"""
    if m < -1:
        raise EDomainError("double factorial is defined for m >= -1", m=m)
    if m <= 0:
        return 0.0
    if m % 2 == 0:
        j = m // 2
        return j * math.log(2.0) + float(special.gammaln(j + 1))
    j = (m + 1) // 2
    return j * math.log(2.0) + float(special.gammaln(j + 0.5)) - 0.5 * math.log(math.pi)


def double_factorial(m: int) -> float:
    """m!! with (-1)!! = 0!! = 1

    Above 150 the value comes from :func:`log_double_factorial`; m!! overflows a float from
    m = 301 on and is returned as ``math.inf`` there.
    """
    if m < -1:
        raise EDomainError("double factorial is defined for m >= -1", m=m)
    if m <= DOUBLE_FACTORIAL_EXACT_MAX:
        return float(math.prod(range(m, 0, -2)))
    return exp_or_inf(log_double_factorial(m))


def beta(p: float, q: float) -> float:
    """Beta function B(p, q) = Gamma(p) Gamma(q) / Gamma(p + q)"""
    if not (p > 0 and q > 0):
        raise EDomainError("beta() requires positive arguments", p=p, q=q)
    return math.exp(log_gamma(p) + log_gamma(q) - log_gamma(p + q))


def _check_argument(z: np.ndarray) -> None:
    if np.any(~np.isfinite(z)) or np.any(z < 0) or np.any(z >= 1):
        raise EDomainError("2F1 argument must satisfy 0 <= z < 1", z=z)


def _check_logcase(args: Hyp2F1Args) -> None:
    if not (args.a > 0 and args.b > 0):
        raise EDomainError("2F1 parameters a, b must be positive", a=args.a, b=args.b)
    if abs(args.c - args.a - args.b) > 4 * np.finfo(float).eps * max(1.0, abs(args.c)):
        raise EDomainError("2F1 logarithmic case requires c = a + b", a=args.a, b=args.b, c=args.c)


def _as_result(value: np.ndarray, z: ArrayLike) -> ArrayLike:
    """Reshapes a flat result like ``z``; scalars come back as float"""
    if np.ndim(z) == 0:
        return float(value.reshape(-1)[0])
    return value.reshape(np.shape(z))


def _sum_series(a: float, b: float, c: float, z: np.ndarray, first: int, max_terms: int):
    """Gauss series from the term of index ``first`` (0 or 1) over a flat array of z

    Returns the sums and a mask of the entries that met the stopping criterion.
    """
    term = np.ones_like(z)
    total = np.ones_like(z) if first == 0 else np.zeros_like(z)
    small = np.zeros(z.shape, dtype=int)
    done = z == 0
    for k in range(max_terms):
        if done.all():
            break
        term = term * ((a + k) * (b + k) / ((c + k) * (k + 1))) * z
        total = np.where(done, total, total + term)
        small = np.where(np.abs(term) < HYP2F1_TOL * np.abs(total), small + 1, 0)
        done = done | (small >= HYP2F1_TAIL_TERMS)
    return total, done


def _sum_connection(a: float, b: float, z: np.ndarray, max_terms: int):
    """Connection series at w = 1 - z over a flat array of z in (0, 1), without the Gamma ratio"""
    w = 1.0 - z
    log_w = np.log(w)
    psi_sum = 2 * digamma(1.0) - digamma(a) - digamma(b)
    coef = 1.0
    power = np.ones_like(z)
    total = psi_sum - log_w
    small = np.zeros(z.shape, dtype=int)
    done = np.zeros(z.shape, dtype=bool)
    for k in range(max_terms):
        if done.all():
            break
        coef *= (a + k) * (b + k) / ((k + 1) * (k + 1))
        psi_sum += 2.0 / (k + 1) - 1.0 / (a + k) - 1.0 / (b + k)
        power = power * w
        term = coef * (psi_sum - log_w) * power
        total = np.where(done, total, total + term)
        small = np.where(np.abs(term) < HYP2F1_TOL * np.abs(total), small + 1, 0)
        done = done | (small >= HYP2F1_TAIL_TERMS)
    return total, done


def _raise_truncated(what: str, partial: np.ndarray, z: ArrayLike, max_terms: int) -> None:
    logger.warning("%s stopped at the term cap (%d terms)", what, max_terms)
    raise EAccuracyError(
        f"{what} did not converge within the term cap",
        partial_value=_as_result(partial, z),
        terms=max_terms,
    )


def hyp2f1_series(args: Hyp2F1Args, max_terms: int = HYP2F1_MAXTERM) -> ArrayLike:
    """Direct Gauss series sum (a)_k (b)_k / ((c)_k k!) z^k for 0 <= z < 1

    Works for any positive a, b, c; convergence slows down to a crawl as z approaches 1.

    :raise EDomainError: If z is outside of [0, 1)
    :raise EAccuracyError: If the series is not summed within ``max_terms`` terms
    """
    z = np.asarray(args.z, dtype=float).reshape(-1)
    _check_argument(z)
    total, done = _sum_series(args.a, args.b, args.c, z, 0, max_terms)
    if not done.all():
        _raise_truncated("2F1 series", total, args.z, max_terms)
    return _as_result(total, args.z)


def hyp2f1_connection(args: Hyp2F1Args, max_terms: int = HYP2F1_MAXTERM) -> ArrayLike:
    """Logarithmic connection formula at 1 - z, valid for c = a + b and 0 < z < 1

    2F1(a, b; a+b; z) = Gamma(a+b)/(Gamma(a)Gamma(b)) *
        sum_k (a)_k (b)_k / (k!)^2 [2 psi(k+1) - psi(a+k) - psi(b+k) - ln(1-z)] (1-z)^k
    """
    _check_logcase(args)
    z = np.asarray(args.z, dtype=float).reshape(-1)
    _check_argument(z)
    if np.any(z == 0):
        raise EDomainError("connection formula requires z > 0", z=args.z)
    scale = math.exp(log_gamma(args.c) - log_gamma(args.a) - log_gamma(args.b))
    total, done = _sum_connection(args.a, args.b, z, max_terms)
    if not done.all():
        _raise_truncated("2F1 connection series", scale * total, args.z, max_terms)
    return _as_result(scale * total, args.z)


def _evaluate_logcase(args: Hyp2F1Args, first: int) -> ArrayLike:
    _check_logcase(args)
    z = np.asarray(args.z, dtype=float).reshape(-1)
    _check_argument(z)
    near_one = z > HYP2F1_CROSSOVER
    value = np.empty_like(z)
    if np.any(~near_one):
        total, done = _sum_series(args.a, args.b, args.c, z[~near_one], first, HYP2F1_MAXTERM)
        if not done.all():
            _raise_truncated("2F1 series", total, args.z, HYP2F1_MAXTERM)
        value[~near_one] = total
    if np.any(near_one):
        scale = math.exp(log_gamma(args.c) - log_gamma(args.a) - log_gamma(args.b))
        total, done = _sum_connection(args.a, args.b, z[near_one], HYP2F1_MAXTERM)
        if not done.all():
            _raise_truncated("2F1 connection series", scale * total, args.z, HYP2F1_MAXTERM)
        value[near_one] = scale * total - (1.0 if first else 0.0)
    return _as_result(value, args.z)


def hyp2f1_logcase(args: Hyp2F1Args) -> ArrayLike:
    """2F1(a, b; a+b; z) for 0 <= z < 1

    Uses the direct series for z <= 0.75 and the connection formula at 1 - z above, where
    z = 1 is a logarithmic singularity.

    :raise EDomainError: If c != a + b, a or b are not positive, or z is outside of [0, 1)
    """
    return _evaluate_logcase(args, 0)


def hyp2f1_minus_one(args: Hyp2F1Args) -> ArrayLike:
    """2F1(a, b; a+b; z) - 1, summed from the first series term on the series branch"""
    return _evaluate_logcase(args, 1)
