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
"""Unit tests"""
import json
import logging
import math
import os
import pickle
import tempfile
import unittest

import numpy as np
from click.testing import CliRunner
from scipy import special

from common import EInvalidGridSpec, RelativePathsFormatter, parse_grid, parse_int_grid
from config import Config, basedir
from sharpgrad import setup_logging
from sharpgrad.cli import cli
from sharpgrad.constants import (
    Method,
    ProblemPoint,
    center_constant,
    closed3_estimate,
    directional_constant,
    gradient_constant,
    halfspace_constant,
    radial_constant_closed3,
)
from sharpgrad.dispatch import GridDispatcher
from sharpgrad.exceptions import EAccuracyError, EDomainError
from sharpgrad.identities import (
    IdentityReport,
    cauchy_schwarz_bound,
    lemma3_sides,
    lemma4_sides,
    lemma5_value,
    s_integrals,
)
from sharpgrad.majorant3 import (
    SMALL_ARGUMENT,
    closed_S,
    closed_S1,
    closed_S2,
    coefficient_a,
    coefficient_a_binomial,
    coefficient_a_scaled,
    conjecture_chain,
    extract_series_coefficients,
    lemma6_report,
    lemma6_verify,
    majorant,
    majorant_closed,
    majorant_dc,
    majorant_series_derivative,
    majorant_series_T,
    series_constant_term,
    t_prime_at_one,
)
from sharpgrad.optimize import golden_section_maximize, grid_maximum
from sharpgrad.oracle import (
    TEST_FUNCTIONS,
    ExtremalSample,
    constant_oracle_direct,
    constant_oracle_moebius,
    extremal_derivative,
    extremal_sample,
    poisson_gradient,
    poisson_kernel,
    verify_inner_integral,
    verify_projection_lemma,
)
from sharpgrad.quadrature import gauss_legendre_rule, integrate_adaptive, sphere_integral
from sharpgrad.reduced import alpha_shift, gegenbauer_integral, representation_prefactor
from sharpgrad.specfun import (
    Hyp2F1Args,
    beta,
    digamma,
    double_factorial,
    hyp2f1_connection,
    hyp2f1_logcase,
    hyp2f1_minus_one,
    hyp2f1_series,
    log_double_factorial,
    log_gamma,
    pochhammer,
)
from sharpgrad.suites import (
    ANGLES,
    DIMENSIONS,
    RADII,
    SuiteOptions,
    octic_identity_gap,
    registry,
)

# Closed radial constant in dimension 3 at rho = 0.5
RADIAL_HALF = 2.0137018


def truncated_sum(terms: int) -> float:
    """Raises like a series stopped at its term cap, in whichever process runs it"""
    raise EAccuracyError("Series stopped at the term cap", partial_value=0.5, terms=terms)


class TestConfig(Config):  # pylint: disable=too-few-public-methods
    """Test config"""

    LOG_LEVEL = "ERROR"
    LOG_FILE_DIR = None
    JOBS = 1


class SharpGradTestCase(unittest.TestCase):
    """Base class for common test cases"""

    def shortDescription(self):
        """Disable test docstring output"""
        return None

    def setUp(self):
        """Set up test"""
        setup_logging(TestConfig)

    def assertRelativelyClose(self, first, second, rel, msg=None):
        """Fail unless |first - second| <= rel * |second|"""
        self.assertLessEqual(abs(first - second), rel * abs(second), msg)


class GridParserCase(SharpGradTestCase):
    """Grid specification parser test case"""

    def test_parse_uniform_grid(self):
        """Test that start:stop:count yields count nodes with both endpoints"""
        self.assertEqual(parse_grid("0:1:5"), [0.0, 0.25, 0.5, 0.75, 1.0])
        self.assertEqual(parse_grid("0.3:0.9:1"), [0.3])

    def test_parse_value_and_list(self):
        """Test parsing a single value and a comma-separated list"""
        self.assertEqual(parse_grid("0.5"), [0.5])
        self.assertEqual(parse_grid("0.1, 0.3,0.5"), [0.1, 0.3, 0.5])
        self.assertEqual(parse_grid(0.7), [0.7])

    def test_parse_grid_raises_invalid_grid_spec(self):
        """Test that malformed grids raise EInvalidGridSpec"""
        for spec in ("0:1:0", "0:1", "a:1:3", "0:1:2.5", "", "0.1,x", "nan"):
            with self.subTest(spec=spec):
                with self.assertRaises(EInvalidGridSpec):
                    parse_grid(spec)

    def test_invalid_grid_spec_message(self):
        """Test that the error message names the offending specification"""
        with self.assertRaises(EInvalidGridSpec) as ctx:
            parse_grid("0:1:0")
        self.assertIn("0:1:0", str(ctx.exception))

    def test_parse_int_grid(self):
        """Test integer ranges, lists and values"""
        self.assertEqual(parse_int_grid("3:6"), [3, 4, 5, 6])
        self.assertEqual(parse_int_grid("3,5"), [3, 5])
        self.assertEqual(parse_int_grid("4"), [4])
        self.assertEqual(parse_int_grid(3), [3])
        for spec in ("6:3", "3.5", "1:2:3", ""):
            with self.subTest(spec=spec):
                with self.assertRaises(EInvalidGridSpec):
                    parse_int_grid(spec)


class SpecialFunctionsCase(SharpGradTestCase):
    """Special functions test case"""

    def test_double_factorial(self):
        """Test small double factorials and the log-space branch"""
        self.assertEqual(double_factorial(-1), 1.0)
        self.assertEqual(double_factorial(0), 1.0)
        self.assertEqual(double_factorial(7), 105.0)
        self.assertEqual(double_factorial(8), 384.0)
        self.assertAlmostEqual(log_double_factorial(7), math.log(105.0), places=12)
        self.assertRelativelyClose(
            math.exp(log_double_factorial(149)), double_factorial(149), 1e-12
        )
        with self.assertRaises(EDomainError):
            double_factorial(-3)

    def test_double_factorial_beyond_float_range(self):
        """Test that m!! saturates to infinity once it leaves the float range"""
        self.assertTrue(math.isfinite(double_factorial(300)))
        self.assertEqual(double_factorial(301), math.inf)
        self.assertEqual(double_factorial(1001), math.inf)
        self.assertRelativelyClose(
            log_double_factorial(301), log_double_factorial(299) + math.log(301), 1e-14
        )

    def test_gamma_helpers(self):
        """Test beta, digamma and the rising factorial"""
        self.assertAlmostEqual(beta(0.5, 0.5), math.pi, places=12)
        self.assertAlmostEqual(beta(2.0, 3.0), 1 / 12, places=14)
        self.assertAlmostEqual(digamma(1.0), -np.euler_gamma, places=12)
        self.assertAlmostEqual(pochhammer(0.5, 3), 1.875, places=14)
        self.assertEqual(pochhammer(0.5, 0), 1.0)
        with self.assertRaises(EDomainError):
            beta(0.0, 1.0)

    def test_logcase_against_complete_elliptic_integral(self):
        """Test that 2F1(1/2, 1/2; 1; m) equals (2/pi) K(m)"""
        for m in (0.1, 0.5, 0.75, 0.8, 0.95, 0.999):
            with self.subTest(m=m):
                value = hyp2f1_logcase(Hyp2F1Args(0.5, 0.5, 1.0, m))
                self.assertRelativelyClose(value, 2 / math.pi * special.ellipk(m), 1e-12)

    def test_series_and_connection_agree(self):
        """Test that both evaluators agree where both converge"""
        for n in (3, 4, 5, 6):
            for z in (0.6, 0.7, 0.8, 0.9):
                with self.subTest(n=n, z=z):
                    args = Hyp2F1Args.for_dimension(n, z)
                    self.assertRelativelyClose(
                        hyp2f1_series(args), hyp2f1_connection(args), 1e-10
                    )

    def test_series_and_connection_agree_near_one(self):
        """Test that the slowly converging series still meets the connection formula"""
        args = Hyp2F1Args(0.25, 0.75, 1.0, 0.999)
        self.assertAlmostEqual(hyp2f1_series(args), hyp2f1_connection(args), delta=1e-9)
        self.assertAlmostEqual(hyp2f1_logcase(args), hyp2f1_connection(args), delta=1e-12)

    def test_logarithmic_singularity(self):
        """Test the leading behaviour of 2F1(a, b; a+b; z) as z approaches 1"""
        a, b = 0.25, 0.75
        z = 1 - 1e-10
        scale = math.gamma(a + b) / (math.gamma(a) * math.gamma(b))
        expected = scale * (2 * digamma(1.0) - digamma(a) - digamma(b) - math.log1p(-z))
        self.assertAlmostEqual(hyp2f1_logcase(Hyp2F1Args(a, b, a + b, z)), expected, delta=1e-7)

    def test_logarithmic_ratio_converges_monotonically(self):
        """Test that 2F1 / (-ln(1-z)) decreases towards Gamma(a+b)/(Gamma(a)Gamma(b))"""
        a, b = 0.25, 0.75
        scale = math.gamma(a + b) / (math.gamma(a) * math.gamma(b))
        ratios = []
        for k in range(4, 11):
            z = 1 - 10.0**-k
            ratios.append(hyp2f1_logcase(Hyp2F1Args(a, b, a + b, z)) / -math.log1p(-z))
        self.assertTrue(all(r > scale for r in ratios))
        self.assertTrue(all(later < earlier for earlier, later in zip(ratios, ratios[1:])))

    def test_contiguous_derivative(self):
        """Test d/dz 2F1(a, b; c; z) = (ab/c) 2F1(a+1, b+1; c+1; z)"""
        a, b, c = 0.25, 0.75, 1.0
        h = 1e-5
        for z in (0.1, 0.5, 0.9):
            with self.subTest(z=z):
                numeric = (
                    hyp2f1_logcase(Hyp2F1Args(a, b, c, z + h))
                    - hyp2f1_logcase(Hyp2F1Args(a, b, c, z - h))
                ) / (2 * h)
                shifted = hyp2f1_series(Hyp2F1Args(a + 1, b + 1, c + 1, z))
                self.assertAlmostEqual(numeric, a * b / c * shifted, delta=1e-6)

    def test_pochhammer_against_gamma_ratio(self):
        """Test (a)_k = Gamma(a+k) / Gamma(a)"""
        for a, k in ((0.25, 7), (1.5, 12), (3.0, 20)):
            with self.subTest(a=a, k=k):
                self.assertRelativelyClose(
                    pochhammer(a, k), math.exp(log_gamma(a + k) - log_gamma(a)), 1e-11
                )

    def test_minus_one_is_accurate_for_small_arguments(self):
        """Test that 2F1 - 1 keeps relative accuracy near z = 0"""
        args = Hyp2F1Args.for_dimension(3, 1e-10)
        self.assertRelativelyClose(hyp2f1_minus_one(args), 3 / 16 * 1e-10, 1e-8)
        self.assertEqual(hyp2f1_logcase(Hyp2F1Args.for_dimension(3, 0.0)), 1.0)

    def test_vectorized_arguments(self):
        """Test that arrays of z come back with the same shape"""
        z = np.array([[0.0, 0.3], [0.8, 0.95]])
        values = hyp2f1_logcase(Hyp2F1Args.for_dimension(4, z))
        self.assertEqual(values.shape, z.shape)
        self.assertEqual(values[0, 0], 1.0)
        self.assertTrue(np.all(np.diff(values.reshape(-1)) > 0))

    def test_hyp2f1_raises_domain_error(self):
        """Test that arguments outside [0, 1) and c != a + b are rejected"""
        for z in (1.0, -0.1, float("nan")):
            with self.subTest(z=z):
                with self.assertRaises(EDomainError):
                    hyp2f1_logcase(Hyp2F1Args.for_dimension(3, z))
        with self.assertRaises(EDomainError):
            hyp2f1_logcase(Hyp2F1Args(0.25, 0.75, 2.0, 0.5))

    def test_series_term_cap_raises_accuracy_error(self):
        """Test that a truncated series reports its partial sum"""
        with self.assertRaises(EAccuracyError) as ctx:
            hyp2f1_series(Hyp2F1Args.for_dimension(3, 0.5), max_terms=5)
        self.assertEqual(ctx.exception.terms, 5)
        self.assertGreater(ctx.exception.partial_value, 1.0)


class QuadratureCase(SharpGradTestCase):
    """Quadrature test case"""

    def test_gauss_legendre_exactness(self):
        """Test that the n-point rule integrates polynomials of degree 2n-1 exactly"""
        self.assertEqual(list(gauss_legendre_rule(1).weights), [2.0])
        two = gauss_legendre_rule(2)
        self.assertAlmostEqual(two.nodes[1], 1 / math.sqrt(3), places=15)
        self.assertAlmostEqual(two.nodes[0], -1 / math.sqrt(3), places=15)
        with self.assertRaises(EDomainError):
            gauss_legendre_rule(513)
        rule = gauss_legendre_rule(5)
        self.assertAlmostEqual(float(np.sum(rule.weights)), 2.0, places=14)
        self.assertAlmostEqual(float(rule.weights @ rule.nodes**8), 2 / 9, places=14)
        rule = gauss_legendre_rule(128)
        self.assertAlmostEqual(float(np.sum(rule.weights)), 2.0, places=13)
        cosine = float(rule.weights @ np.cos(rule.nodes))
        self.assertAlmostEqual(cosine, 2 * math.sin(1), places=13)

    def test_adaptive_with_kink(self):
        """Test integrating |x - 0.3| with a breakpoint at the kink"""
        result = integrate_adaptive(lambda x: np.abs(x - 0.3), -1.0, 1.0, 1e-12, [0.3])
        self.assertTrue(result.converged)
        self.assertAlmostEqual(result.value, 1.09, delta=1e-12)

    def test_adaptive_with_endpoint_singularity(self):
        """Test that bisection resolves the square root singularity at 0"""
        result = integrate_adaptive(np.sqrt, 0.0, 1.0, 1e-10)
        self.assertTrue(result.converged)
        self.assertAlmostEqual(result.value, 2 / 3, delta=1e-9)

    def test_adaptive_error_shrinks_with_depth(self):
        """Test that every extra bisection level at least halves the error of exp(x)"""
        errors = [
            integrate_adaptive(np.exp, -20.0, 20.0, 1e-30, max_depth=depth).error_estimate
            for depth in (0, 1, 2)
        ]
        for coarse, fine in zip(errors, errors[1:]):
            self.assertLessEqual(fine, coarse / 2)
        fine = integrate_adaptive(np.exp, -20.0, 20.0, 1e-6)
        self.assertRelativelyClose(fine.value, 2 * math.sinh(20.0), 1e-14)

    def test_adaptive_raises_domain_error(self):
        """Test invalid intervals and breakpoints"""
        with self.assertRaises(EDomainError):
            integrate_adaptive(np.sqrt, 1.0, 0.0, 1e-10)
        with self.assertRaises(EDomainError):
            integrate_adaptive(np.sqrt, 0.0, 1.0, 1e-10, [1.5])
        with self.assertRaises(EDomainError):
            integrate_adaptive(np.sqrt, -1.0, 1.0, 1e-10)

    def test_sphere_moments(self):
        """Test moments of the first coordinate over the unit sphere"""
        for n in (2, 3, 4, 5):
            with self.subTest(n=n):
                self.assertAlmostEqual(
                    sphere_integral(lambda xi: np.ones(len(xi)), n).value, 1.0, places=12
                )
                self.assertAlmostEqual(
                    sphere_integral(lambda xi: xi[:, 0] ** 2, n).value, 1 / n, places=12
                )
        self.assertAlmostEqual(
            sphere_integral(lambda xi: xi[:, 0] ** 4, 3).value, 0.2, places=12
        )

    def test_sphere_kink_and_collapsed_levels(self):
        """Test |xi_1| with a polar breakpoint and a partially collapsed decomposition"""
        abs_first = sphere_integral(lambda xi: np.abs(xi[:, 0]), 3, polar_breakpoints=(0.0,))
        self.assertAlmostEqual(abs_first.value, 0.5, places=12)
        abs_first = sphere_integral(lambda xi: np.abs(xi[:, 0]), 4, polar_breakpoints=(0.0,))
        self.assertAlmostEqual(abs_first.value, 4 / (3 * math.pi), places=12)
        plane = sphere_integral(lambda xi: xi[:, 0] ** 2 + xi[:, 1] ** 2, 5, active_dims=2)
        self.assertAlmostEqual(plane.value, 0.4, places=12)

    def test_sphere_odd_integrands_vanish(self):
        """Test that integrands odd in xi_2 integrate to zero up to roundoff"""
        integrands = (
            lambda xi: xi[:, 1] * np.exp(xi[:, 0]),
            lambda xi: xi[:, 1] ** 3 * xi[:, 0] ** 2,
        )
        for n in (3, 4, 5):
            for g in integrands:
                with self.subTest(n=n, g=g):
                    self.assertLessEqual(abs(sphere_integral(g, n).value), 1e-13)


class ReducedIntegralCase(SharpGradTestCase):
    """Reduced one-dimensional integral test case"""

    def test_prefactor_and_shift(self):
        """Test the representation prefactor and the shifted center"""
        self.assertAlmostEqual(representation_prefactor(3, 0.5), 2.0, places=14)
        self.assertAlmostEqual(alpha_shift(3, 0.6), 0.2, places=15)
        self.assertEqual(alpha_shift(4, 0.0), 0.0)

    def test_gegenbauer_fixtures(self):
        """Test the x^2-weighted kernel integral in dimension 3 at random radii"""
        rng = np.random.default_rng(7)
        for rho in rng.uniform(0.05, 0.95, 10):
            with self.subTest(rho=rho):
                result = gegenbauer_integral(
                    3, lambda x, r=rho: x * x / np.sqrt(1 - 2 * r * x + r * r), 1e-12
                )
                self.assertAlmostEqual(result.value, 4 * rho**2 / 15 + 2 / 3, delta=1e-10)
                result = gegenbauer_integral(
                    3, lambda x, r=rho: (1 - x * x) / np.sqrt(1 + r * r - 2 * r * x), 1e-12
                )
                self.assertAlmostEqual(result.value, 4 / 3 - 4 * rho**2 / 15, delta=1e-10)


class ConstantsCase(SharpGradTestCase):
    """Sharp constant test case"""

    def test_closed_radial_constant(self):
        """Test the closed form in dimension 3 and its limits"""
        self.assertAlmostEqual(radial_constant_closed3(0.5), RADIAL_HALF, places=6)
        self.assertEqual(radial_constant_closed3(0.0), 1.5)
        small = 0.5e-4
        self.assertAlmostEqual(
            radial_constant_closed3(small), 1.5 + 37 / 24 * small**2, delta=1e-15
        )
        for rho in (0.99e-4, 1.01e-4):
            r2 = rho * rho
            self.assertAlmostEqual(
                radial_constant_closed3(rho),
                1.5 + 37 / 24 * r2 + 665 / 432 * r2 * r2,
                delta=1e-14,
            )
        rho = 1 - 1e-6
        self.assertAlmostEqual(
            (1 - rho * rho) * radial_constant_closed3(rho), (4 / 3) ** 1.5, delta=1e-4
        )

    def test_center_and_halfspace_anchors(self):
        """Test the closed anchors in low dimensions"""
        self.assertAlmostEqual(center_constant(2), 4 / math.pi, places=12)
        self.assertAlmostEqual(center_constant(3), 1.5, places=12)
        self.assertAlmostEqual(center_constant(4), 16 / (3 * math.pi), places=12)
        self.assertAlmostEqual(halfspace_constant(2), 2 / math.pi, places=12)
        self.assertAlmostEqual(halfspace_constant(3), 4 / (3 * math.sqrt(3)), places=12)
        self.assertAlmostEqual(halfspace_constant(4), 3 * math.sqrt(3) / (2 * math.pi), places=12)
        with self.assertRaises(EDomainError):
            center_constant(1)

    def test_representation_matches_closed_form(self):
        """Test the radial representation against the closed form in dimension 3"""
        for rho in (0.1, 0.3, 0.5, 0.7, 0.9):
            with self.subTest(rho=rho):
                estimate = directional_constant(ProblemPoint(3, rho, 0.0))
                self.assertTrue(estimate.converged)
                self.assertEqual(estimate.method, Method.REPRESENTATION)
                self.assertAlmostEqual(estimate.value, radial_constant_closed3(rho), delta=1e-8)

    def test_representation_at_center(self):
        """Test that the representation near the origin reproduces the center constant"""
        for n in (3, 4, 5, 6):
            with self.subTest(n=n):
                for alpha in (0.0, 1.0):
                    value = directional_constant(ProblemPoint(n, 1e-10, alpha)).value
                    self.assertAlmostEqual(value, center_constant(n), delta=1e-8)

    def test_problem_point_validation(self):
        """Test that out-of-range points raise EDomainError"""
        for pt in (
            ProblemPoint(2, 0.5, 0.0),
            ProblemPoint(3, 1.0, 0.0),
            ProblemPoint(3, -0.1, 0.0),
            ProblemPoint(3, 0.5, -0.1),
            ProblemPoint(3, 0.5, 2.0),
        ):
            with self.subTest(pt=pt):
                with self.assertRaises(EDomainError):
                    pt.validate()
        with self.assertRaises(EDomainError):
            directional_constant(ProblemPoint(3, 0.5, 0.0), tol=1e-14)

    def test_closed3_estimate(self):
        """Test that the closed estimate is defined on the radial direction in dimension 3"""
        self.assertAlmostEqual(
            closed3_estimate(ProblemPoint(3, 0.5, 0.0)).value, RADIAL_HALF, places=6
        )
        self.assertIsNone(closed3_estimate(ProblemPoint(3, 0.5, 0.3)))
        self.assertIsNone(closed3_estimate(ProblemPoint(4, 0.5, 0.0)))

    def test_gradient_constant_is_radial_in_dimension_3(self):
        """Test that the supremum over directions is attained at alpha = 0"""
        for rho in (0.5, 0.9):
            with self.subTest(rho=rho):
                result = gradient_constant(3, rho)
                self.assertTrue(result.estimate.converged)
                self.assertLess(result.argmax_alpha, 1e-4)
                self.assertRelativelyClose(
                    result.estimate.value, radial_constant_closed3(rho), 1e-6
                )

    def test_gradient_constant_is_radial_in_dimension_4(self):
        """Test the argmax of the profile in dimension 4"""
        result = gradient_constant(4, 0.7)
        self.assertTrue(result.estimate.converged)
        self.assertLess(result.argmax_alpha, 1e-4)
        self.assertRelativelyClose(
            result.estimate.value, directional_constant(ProblemPoint(4, 0.7, 0.0)).value, 1e-9
        )

    def test_flat_profile_reports_the_smallest_alpha(self):
        """Test that a profile flat to the tie tolerance reports alpha = 0"""
        result = gradient_constant(3, 1e-12)
        self.assertAlmostEqual(result.estimate.value, 1.5, delta=1e-9)
        self.assertEqual(result.argmax_alpha, 0.0)

    def test_gradient_constant_does_not_depend_on_jobs(self):
        """Test that the worker count leaves the result bit for bit unchanged"""
        self.assertEqual(gradient_constant(4, 0.5, jobs=1), gradient_constant(4, 0.5, jobs=2))
        self.assertEqual(gradient_constant(3, 0.3), gradient_constant(3, 0.3))


class OptimizeCase(SharpGradTestCase):
    """Profile maximization test case"""

    def test_golden_section(self):
        """Test locating the maximum of a concave function"""
        alpha, value = golden_section_maximize(lambda x: -((x - 0.3) ** 2), 0.0, 1.0, 1e-8)
        self.assertAlmostEqual(alpha, 0.3, delta=1e-7)
        self.assertAlmostEqual(value, 0.0, delta=1e-14)

    def test_grid_maximum_breaks_ties_towards_small_index(self):
        """Test that nearly equal values pick the first node and list every local maximum"""
        best = grid_maximum([1.0, 0.5, 1.0 + 1e-12, 0.2], tie=1e-9)
        self.assertEqual(best.index, 0)
        self.assertEqual(best.local_maxima, [0, 2])


class DispatchCase(SharpGradTestCase):
    """Grid dispatcher test case"""

    def test_results_keep_input_order(self):
        """Test that results come back in input order"""
        self.assertEqual(GridDispatcher(1).map(abs, [-3, 2, -1]), [3, 2, 1])
        self.assertEqual(GridDispatcher(2).map(abs, [-3, 2, -1]), [3, 2, 1])

    def test_invalid_job_count(self):
        """Test that a nonpositive job count raises EDomainError"""
        with self.assertRaises(EDomainError):
            GridDispatcher(-1)

    def test_errors_survive_pickling(self):
        """Test that message and fields of an error come back from pickle"""
        error = pickle.loads(pickle.dumps(EAccuracyError("msg", partial_value=1.5, terms=7)))
        self.assertIsInstance(error, EAccuracyError)
        self.assertEqual(str(error), "msg")
        self.assertEqual(error.partial_value, 1.5)
        self.assertEqual(error.terms, 7)
        error = pickle.loads(pickle.dumps(EDomainError(rho=2.0)))
        self.assertIsInstance(error, ValueError)
        self.assertEqual(str(error), EDomainError.__doc__)
        self.assertEqual(error.rho, 2.0)

    def test_worker_errors_keep_their_message(self):
        """Test that an error raised in a pool worker reaches the caller intact"""
        with self.assertRaises(EAccuracyError) as ctx:
            GridDispatcher(2).map(truncated_sum, [3, 4])
        self.assertEqual(str(ctx.exception), "Series stopped at the term cap")
        self.assertIn(ctx.exception.terms, (3, 4))
        self.assertEqual(ctx.exception.partial_value, 0.5)


class OracleCase(SharpGradTestCase):
    """Poisson kernel oracle test case"""

    def test_poisson_gradient_matches_finite_differences(self):
        """Test the analytic kernel gradient against central differences"""
        rng = np.random.default_rng(11)
        zeta = rng.normal(size=(4, 3))
        zeta /= np.linalg.norm(zeta, axis=1)[:, None]
        x = np.array([0.3, -0.2, 0.1])
        gradient = poisson_gradient(x, zeta)
        h = 1e-6
        for j in range(3):
            step = np.zeros(3)
            step[j] = h
            numeric = (poisson_kernel(x + step, zeta) - poisson_kernel(x - step, zeta)) / (2 * h)
            scale = np.maximum(1.0, np.abs(gradient[:, j]))
            self.assertTrue(np.all(np.abs(numeric - gradient[:, j]) <= 1e-6 * scale))

    def test_oracles_at_center(self):
        """Test both oracles at the origin, where the constant is n E|xi_1|"""
        pt = ProblemPoint(3, 0.0, 0.4)
        self.assertAlmostEqual(constant_oracle_direct(pt).value, 1.5, delta=1e-9)
        self.assertAlmostEqual(constant_oracle_moebius(pt).value, 1.5, delta=1e-9)

    def test_oracles_agree_with_representation(self):
        """Test the three evaluation methods against each other"""
        for pt in (
            ProblemPoint(3, 0.5, 0.0),
            ProblemPoint(3, 0.6, 1.0),
            ProblemPoint(4, 0.7, math.pi / 2),
            ProblemPoint(5, 0.4, math.pi / 3),
        ):
            with self.subTest(pt=pt):
                reference = directional_constant(pt).value
                direct = constant_oracle_direct(pt)
                moebius = constant_oracle_moebius(pt)
                self.assertEqual(direct.method, Method.ORACLE_DIRECT)
                self.assertRelativelyClose(direct.value, reference, 1e-6)
                self.assertRelativelyClose(moebius.value, reference, 1e-6)

    def test_oracles_agree_on_the_verification_grid(self):
        """Test both oracles against the representation over every dimension, radius, angle"""
        for n in DIMENSIONS:
            for rho in RADII:
                for alpha in ANGLES:
                    with self.subTest(n=n, rho=rho, alpha=alpha):
                        pt = ProblemPoint(n, rho, alpha)
                        reference = directional_constant(pt).value
                        self.assertRelativelyClose(
                            constant_oracle_direct(pt).value, reference, 1e-6
                        )
                        self.assertRelativelyClose(
                            constant_oracle_moebius(pt).value, reference, 1e-6
                        )

    def test_projection_formula(self):
        """Test the projection formula for every test function"""
        for name in TEST_FUNCTIONS:
            for n, k in ((3, 1), (3, 2), (4, 2), (5, 2)):
                with self.subTest(test_fn=name, n=n, k=k):
                    report = verify_projection_lemma(name, n, k)
                    self.assertTrue(report.passed, report)
        with self.assertRaises(EDomainError):
            verify_projection_lemma("cubic", 3, 1)
        with self.assertRaises(EDomainError):
            verify_projection_lemma("one", 3, 3)

    def test_projection_formula_known_values(self):
        """Test the sphere means of x_1^2 and |x_1|"""
        self.assertAlmostEqual(verify_projection_lemma("x1_squared", 5, 1).rhs, 0.2, places=10)
        self.assertAlmostEqual(verify_projection_lemma("abs_x1", 3, 1).lhs, 0.5, places=10)

    def test_inner_integral(self):
        """Test the chord integral against its hypergeometric closed form"""
        for n, rho, alpha, x in ((3, 0.7, 1.0, 0.3), (4, 0.5, 0.0, -0.4), (5, 0.0, 0.5, 0.8)):
            with self.subTest(n=n, rho=rho, alpha=alpha, x=x):
                self.assertTrue(verify_inner_integral(n, rho, alpha, x).passed)
        with self.assertRaises(EDomainError):
            verify_inner_integral(3, 0.5, 0.5, 1.0)

    def test_extremal_function_attains_the_constant(self):
        """Test the derivative of the extremal function along the extremal direction"""
        derivative = extremal_derivative(ProblemPoint(3, 0.5, 0.0))
        self.assertGreaterEqual(derivative, 0.999 * RADIAL_HALF)
        self.assertLessEqual(derivative, RADIAL_HALF + 1e-3)
        self.assertAlmostEqual(
            extremal_derivative(ProblemPoint(3, 0.0, 0.7), refinement=2), 1.5, delta=1e-4
        )

    def test_extremal_function_stays_bounded(self):
        """Test |u*| <= 1 on both sides and the flag on out-of-range values"""
        sample = extremal_sample(ProblemPoint(3, 0.5, 0.0))
        self.assertTrue(sample.bounded)
        self.assertLessEqual(abs(sample.forward), 1.0 + sample.error_estimate + 1e-12)
        self.assertLessEqual(abs(sample.backward), 1.0 + sample.error_estimate + 1e-12)
        self.assertGreater(sample.forward, sample.backward)
        self.assertFalse(ExtremalSample(1.5, 0.2, 0.0, 0.0).bounded)
        self.assertFalse(ExtremalSample(0.2, -1.001, 1e-6, 0.0).bounded)
        self.assertTrue(ExtremalSample(1.0 + 1e-9, -0.5, 1e-8, 0.0).bounded)

    def test_extremal_derivative_raises_domain_error(self):
        """Test the admissible step range"""
        with self.assertRaises(EDomainError):
            extremal_derivative(ProblemPoint(3, 0.5, 0.0), h=0.1)
        with self.assertRaises(EDomainError):
            extremal_derivative(ProblemPoint(3, 0.9995, 0.0), h=1e-3)


class IdentitiesCase(SharpGradTestCase):
    """Integral identities test case"""

    def test_identity_report(self):
        """Test equality and inequality verdicts"""
        self.assertTrue(IdentityReport.equality(1.0, 1.0 + 1e-10, 1e-9).passed)
        self.assertFalse(IdentityReport.equality(1.0, 1.1, 1e-9).passed)
        self.assertTrue(IdentityReport.equality(1.0, 1.1, 1e-9, error=0.2).passed)
        report = IdentityReport.inequality(1.0, 2.0, 1e-9)
        self.assertTrue(report.passed)
        self.assertEqual(report.abs_gap, 0.0)
        self.assertFalse(IdentityReport.inequality(2.0, 1.0, 1e-9).passed)

    def test_hypergeometric_weight_identity(self):
        """Test that the weighted integral does not depend on alpha"""
        report = lemma3_sides(3, 0.5, 0.7)
        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.rhs, 2.0, delta=1e-10)
        self.assertEqual(report.rhs, lemma3_sides(3, 0.5, 1.3).rhs)
        at_zero = lemma3_sides(5, 0.8, 0.0)
        self.assertAlmostEqual(at_zero.lhs, at_zero.rhs, delta=1e-12)
        for n in (4, 5, 6):
            with self.subTest(n=n):
                self.assertTrue(lemma3_sides(n, 0.9, math.pi / 3).passed)

    def test_second_moment_identity(self):
        """Test the x^2-weighted identity and its closed right side in dimension 3"""
        rho, alpha = 0.6, 1.2
        report = lemma4_sides(3, rho, alpha)
        self.assertTrue(report.passed)
        expected = (2 / 3 + 4 * rho**2 / 15) * math.cos(alpha) ** 2 + (
            2 / 3 - 2 * rho**2 / 15
        ) * math.sin(alpha) ** 2
        self.assertAlmostEqual(report.rhs, expected, delta=1e-10)
        self.assertTrue(lemma4_sides(4, rho, alpha).passed)

    def test_signed_integral_vanishes(self):
        """Test that the signed representation integral is zero"""
        for n, rho, alpha in ((3, 0.9, math.pi / 2), (3, 0.5, 0.4), (5, 0.8, math.pi / 3)):
            with self.subTest(n=n, rho=rho, alpha=alpha):
                report = lemma5_value(n, rho, alpha)
                self.assertTrue(report.passed)
                self.assertLess(abs(report.lhs), 1e-9)
        self.assertLess(abs(lemma5_value(4, 0.0, 0.5).lhs), 1e-12)

    def test_s_integrals_vanish_on_the_radial_direction(self):
        """Test that the hypergeometric excess is zero at alpha = 0"""
        parts = s_integrals(3, 0.5, 0.0)
        self.assertEqual(parts.S1, 0.0)
        self.assertEqual(parts.S2, 0.0)
        self.assertAlmostEqual(parts.S, closed_S(0.5, 0.0), delta=1e-12)

    def test_cauchy_schwarz_bound(self):
        """Test the representation integral against S + sqrt(S1 S2)"""
        for n, rho, alpha in ((3, 0.5, 0.8), (3, 0.9, 1.4), (4, 0.7, 0.5)):
            with self.subTest(n=n, rho=rho, alpha=alpha):
                self.assertTrue(cauchy_schwarz_bound(n, rho, alpha).passed)


class MajorantCase(SharpGradTestCase):
    """Majorant and series coefficient test case"""

    def test_closed_forms_against_quadrature(self):
        """Test S, S1 and S2 against quadrature in dimension 3"""
        for rho, alpha in ((0.5, 0.9), (0.7, 1.2), (0.3, 0.2)):
            with self.subTest(rho=rho, alpha=alpha):
                parts = s_integrals(3, rho, alpha)
                self.assertAlmostEqual(closed_S(rho, alpha), parts.S, delta=1e-8)
                self.assertAlmostEqual(closed_S1(rho, alpha), parts.S1, delta=1e-8)
                self.assertAlmostEqual(closed_S2(rho, alpha), parts.S2, delta=1e-8)

    def test_closed_forms_at_small_radius(self):
        """Test S, S1 and S2 against quadrature where the closed forms cancel to O(rho^2)"""
        for rho in (1e-4, 1e-6, 1e-8):
            for alpha in (0.5, 1.0):
                with self.subTest(rho=rho, alpha=alpha):
                    parts = s_integrals(3, rho, alpha)
                    self.assertAlmostEqual(closed_S(rho, alpha), parts.S, delta=1e-10)
                    self.assertRelativelyClose(closed_S1(rho, alpha), parts.S1, 1e-6)
                    self.assertRelativelyClose(closed_S2(rho, alpha), parts.S2, 1e-6)
                    leading = (rho * math.sin(alpha)) ** 2
                    self.assertRelativelyClose(closed_S1(rho, alpha), leading, 1e-6)
                    self.assertRelativelyClose(closed_S2(rho, alpha), leading / 5, 1e-6)
        self.assertAlmostEqual(majorant(1e-6, 0.5).M, 1.0, delta=1e-10)

    def test_expansion_meets_closed_form_at_the_switch(self):
        """Test continuity across |rho c| = SMALL_ARGUMENT"""
        rho = 0.5
        c = SMALL_ARGUMENT / rho
        below, above = c - 1e-12, c + 1e-12
        self.assertAlmostEqual(
            majorant_closed(rho, below), majorant_closed(rho, above), delta=1e-12
        )
        self.assertAlmostEqual(
            closed_S2(rho, math.acos(below)), closed_S2(rho, math.acos(above)), delta=1e-12
        )
        self.assertAlmostEqual(
            closed_S1(rho, math.acos(below)), closed_S1(rho, math.acos(above)), delta=1e-12
        )
        self.assertAlmostEqual(majorant_dc(rho, below), majorant_dc(rho, above), delta=1e-10)
        mixed = majorant_closed(rho, np.array([below, above]))
        self.assertAlmostEqual(mixed[0], majorant_closed(rho, below), delta=1e-15)
        self.assertAlmostEqual(mixed[1], majorant_closed(rho, above), delta=1e-15)
        self.assertRelativelyClose(
            t_prime_at_one(SMALL_ARGUMENT - 1e-12), t_prime_at_one(SMALL_ARGUMENT + 1e-12), 1e-9
        )

    def test_expansion_matches_series_at_small_radius(self):
        """Test the summed expansion of M against T(c^2) for a tiny radius"""
        for c in (0.1, 0.5, 1.0):
            with self.subTest(c=c):
                self.assertAlmostEqual(
                    majorant_closed(1e-4, c), majorant_series_T(c * c, 1e-4), delta=1e-12
                )

    def test_closed_forms_on_the_radial_direction(self):
        """Test S, S1, S2 at alpha = 0 and the transverse limit of S1"""
        rho = 0.5
        expected = (2 * (1 + rho**2 / 3) ** 1.5 - 2 * (1 - rho**2)) / (3 * rho**2)
        self.assertAlmostEqual(closed_S(rho, 0.0), expected, places=12)
        self.assertAlmostEqual(closed_S1(rho, 0.0), 0.0, delta=1e-10)
        self.assertAlmostEqual(closed_S2(rho, 0.0), 0.0, delta=1e-10)
        self.assertAlmostEqual(
            closed_S1(rho, math.pi / 2), 2 - 2 / math.sqrt(1 + rho**2), delta=1e-9
        )

    def test_majorant_peak_is_the_radial_constant(self):
        """Test that the scaled majorant at alpha = 0 is the closed radial constant"""
        for rho in (0.1, 0.5, 0.9):
            with self.subTest(rho=rho):
                parts = majorant(rho, 0.0)
                self.assertAlmostEqual(parts.M, parts.S, delta=1e-12)
                self.assertRelativelyClose(
                    3 / (2 * (1 - rho**2)) * parts.M, radial_constant_closed3(rho), 1e-12
                )
        self.assertEqual(majorant(0.0, 0.3).M, 1.0)

    def test_majorant_dominates_cauchy_schwarz(self):
        """Test M >= S + sqrt(S1 S2) across directions"""
        for alpha in np.linspace(0.0, math.pi / 2, 9):
            with self.subTest(alpha=alpha):
                parts = majorant(0.6, float(alpha))
                self.assertGreaterEqual(
                    parts.M + 1e-12, parts.S + math.sqrt(max(parts.S1 * parts.S2, 0.0))
                )

    def test_first_coefficients(self):
        """Test a_1, a_2 and the small-rho limit of a_1"""
        self.assertAlmostEqual(coefficient_a(1, 0.5).value, 0.0161405, places=6)
        self.assertAlmostEqual(coefficient_a(2, 0.5).value, -0.0014753, places=6)
        self.assertAlmostEqual(coefficient_a(1, 1e-4).value / 1e-8, 2 / 45, delta=1e-7)

    def test_coefficients_match_binomial_expansion(self):
        """Test the coefficient formula against the binomial expansion"""
        for rho in (0.3, 0.5, 0.8):
            for k in range(1, 7):
                with self.subTest(rho=rho, k=k):
                    self.assertRelativelyClose(
                        coefficient_a_binomial(k, rho), coefficient_a(k, rho).value, 1e-8
                    )

    def test_coefficients_match_fft_extraction(self):
        """Test the coefficient formula against the Taylor coefficients of the closed form"""
        rho = 0.5
        extracted = extract_series_coefficients(rho, 7)
        self.assertAlmostEqual(extracted[0], series_constant_term(rho), delta=1e-10)
        for k in range(1, 7):
            with self.subTest(k=k):
                self.assertAlmostEqual(extracted[k], coefficient_a(k, rho).value, delta=1e-10)

    def test_series_matches_closed_form(self):
        """Test T(t) against the closed majorant and across the switch band"""
        self.assertEqual(majorant_series_T(0.0, 0.6), series_constant_term(0.6))
        for t in (0.2, 0.5, 0.8):
            with self.subTest(t=t):
                self.assertAlmostEqual(
                    majorant_series_T(t, 0.6), majorant_closed(0.6, math.sqrt(t)), delta=1e-9
                )
        self.assertAlmostEqual(majorant_series_T(1.0, 0.3), closed_S(0.3, 0.0), delta=1e-9)
        for rho in (0.3, 0.6, 0.9):
            for t in (0.04, 0.05, 0.06):
                with self.subTest(rho=rho, t=t):
                    self.assertAlmostEqual(
                        majorant_series_T(t, rho),
                        majorant_closed(rho, math.sqrt(t)),
                        delta=1e-9,
                    )

    def test_coefficient_negativity_certificate(self):
        """Test the certificate values at k = 2 and the whole range at one radius"""
        report = lemma6_report(0.5, 2)
        for value, expected in zip((report.P, report.Q, report.R), (140.0, 140.0, -105.0)):
            self.assertAlmostEqual(value, expected, delta=1e-9)
        self.assertAlmostEqual(report.D, -98000.0, delta=1e-6)
        self.assertAlmostEqual(report.D_octic, -98000.0, delta=1e-6)
        self.assertAlmostEqual(report.combination, -98 * 4 - 7 * 2 + 21, delta=1e-9)
        self.assertAlmostEqual(report.l_k, 0.0120536, places=6)
        self.assertAlmostEqual(report.d_k, 2 / 385, places=15)
        self.assertTrue(report.a_k_negative)
        self.assertTrue(report.passed)
        for k in range(2, 11):
            self.assertAlmostEqual(
                lemma6_report(0.5, k).combination, -98 * k * k - 7 * k + 21, delta=1e-9
            )
        reports = lemma6_verify(0.5, 200)
        self.assertEqual(len(reports), 199)
        self.assertTrue(all(r.passed for r in reports))
        with self.assertRaises(EDomainError):
            lemma6_report(0.5, 1)

    def test_coefficients_for_large_k(self):
        """Test that a_k stays finite past the range of the scaled coefficient"""
        value = coefficient_a(500, 0.5).value
        self.assertTrue(math.isfinite(value))
        self.assertLess(value, 0.0)
        self.assertLess(coefficient_a_scaled(300, 0.5), 0.0)
        with self.assertRaises(EAccuracyError):
            coefficient_a_scaled(600, 0.5)
        self.assertEqual(coefficient_a(500, 1e-4).value, 0.0)

    def test_certificate_across_radii(self):
        """Test the negativity certificate for every k <= 200 at several radii and past the
        float range of l_k"""
        for rho in (0.05, 0.3, 0.7, 0.95, 0.999):
            with self.subTest(rho=rho):
                reports = lemma6_verify(rho, 200)
                self.assertEqual([r.k for r in reports if not r.passed], [])
        reports = lemma6_verify(0.5, 600)
        self.assertEqual([r.k for r in reports if not r.passed], [])
        self.assertTrue(math.isfinite(reports[-1].l_k))
        self.assertEqual(reports[-1].a_k_scaled, -math.inf)
        self.assertEqual(reports[-1].D, reports[-1].D_octic)
        with self.assertRaises(EDomainError):
            lemma6_report(1.0, 5)

    def test_boundary_slope_series_near_one(self):
        """Test the term-wise slope at t = 1 where the series needs thousands of terms"""
        with self.assertRaises(EAccuracyError):
            majorant_series_derivative(1.0, 0.9)
        series = majorant_series_derivative(1.0, 0.9, maxterms=20000)
        self.assertAlmostEqual(2 * series, t_prime_at_one(0.9), delta=1e-8)

    def test_boundary_slope(self):
        """Test T'(1) against its value, the series and the closed derivative"""
        self.assertAlmostEqual(t_prime_at_one(0.5), 0.0235209, places=6)
        self.assertAlmostEqual(
            2 * majorant_series_derivative(1.0, 0.5), t_prime_at_one(0.5), delta=1e-8
        )
        self.assertAlmostEqual(majorant_dc(0.5, 1.0), t_prime_at_one(0.5), delta=1e-10)
        self.assertRelativelyClose(t_prime_at_one(1e-4), 4 / 45 * 1e-8, 1e-6)
        for rho in np.linspace(0.01, 0.99, 99):
            with self.subTest(rho=rho):
                self.assertGreaterEqual(t_prime_at_one(float(rho)), 0.0)
                self.assertLessEqual(octic_identity_gap(float(rho)), 1e-10)

    def test_series_raises_domain_error(self):
        """Test the admissible ranges of t and rho"""
        with self.assertRaises(EDomainError):
            majorant_series_T(1.5, 0.5)
        with self.assertRaises(EDomainError):
            majorant_series_T(0.5, 1.0)
        with self.assertRaises(EDomainError):
            majorant_dc(0.5, 0.0)

    def test_conjecture_chain(self):
        """Test every link from the directional constant to the radial constant"""
        report = conjecture_chain(0.5, [float(a) for a in np.linspace(0.0, math.pi / 2, 9)])
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(len(report.links), 27)
        self.assertLess(report.radial_gap, 1e-12)
        self.assertLessEqual(report.max_second_derivative, 0.0)
        self.assertAlmostEqual(report.links[0].slack, 0.0, delta=1e-9)

    def test_conjecture_chain_across_radii(self):
        """Test the chain on a fine angle grid from small radii to radii near the boundary"""
        alphas = [float(a) for a in np.linspace(0.0, math.pi / 2, 33)]
        for rho in (0.01, 0.1, 0.3, 0.7, 0.9):
            with self.subTest(rho=rho):
                report = conjecture_chain(rho, alphas)
                self.assertTrue(report.passed, report.failures)
                self.assertEqual(len(report.links), 99)
                self.assertGreaterEqual(report.t_prime_at_one, 0.0)


class SuiteRegistryCase(SharpGradTestCase):
    """Verification suite registry test case"""

    def test_registered_suites(self):
        """Test the names and the order of the registered suites"""
        self.assertEqual(
            registry.names,
            ["lemma1", "lemma2", "lemma3", "lemma4", "lemma5", "lemma6", "lemma7", "chain"],
        )

    def test_unknown_suite(self):
        """Test that an unknown suite name raises EDomainError"""
        with self.assertRaises(EDomainError):
            registry.run("lemma8", SuiteOptions())

    def test_identity_suites_pass(self):
        """Test the identity suites in dimension 3"""
        options = SuiteOptions(dimensions=(3,))
        for name in ("lemma2", "lemma3", "lemma4", "lemma5"):
            with self.subTest(suite=name):
                cases = registry.run(name, options)
                self.assertTrue(all(c.passed for c in cases), [c for c in cases if not c.passed])

    def test_inner_integral_cases_are_reproducible(self):
        """Test that the chord suite covers every dimension and passes"""
        cases = registry.run("lemma2", SuiteOptions())
        self.assertEqual(len(cases), 12)
        self.assertTrue(all(c.passed for c in cases))

    def test_coefficient_suites_pass(self):
        """Test the coefficient and slope suites"""
        for name in ("lemma6", "lemma7"):
            with self.subTest(suite=name):
                cases = registry.run(name, SuiteOptions(kmax=20))
                self.assertTrue(all(c.passed for c in cases))


class LoggingCase(SharpGradTestCase):
    """Logging setup test case"""

    def test_relative_paths_formatter(self):
        """Test that the relpath token is relative to the configured directory"""
        formatter = RelativePathsFormatter("%(relpath)s", paths_relative_to=basedir)
        record = logging.LogRecord(
            "sharpgrad",
            logging.INFO,
            os.path.join(basedir, "sharpgrad", "cli.py"),
            1,
            "",
            (),
            None,
        )
        self.assertEqual(formatter.format(record), os.path.join("sharpgrad", "cli.py"))

    def test_setup_logging_replaces_handlers(self):
        """Test that repeated setup keeps a single stream handler and honours the level"""
        setup_logging(TestConfig, "debug")
        logger = setup_logging(TestConfig, "info")
        self.assertEqual(len(logger.handlers), 1)
        self.assertEqual(logger.level, logging.INFO)

    def test_file_handler(self):
        """Test that a configured log directory receives the log file"""
        with tempfile.TemporaryDirectory() as log_dir:

            class FileConfig(TestConfig):  # pylint: disable=too-few-public-methods
                LOG_FILE_DIR = log_dir

            logger = setup_logging(FileConfig, "warning")
            logger.warning("written")
            self.assertEqual(len(logger.handlers), 2)
            setup_logging(TestConfig)
            self.assertTrue(os.path.exists(os.path.join(log_dir, "sharpgrad.log")))


class CommandLineCase(SharpGradTestCase):
    """Command-line interface test case"""

    def setUp(self):
        """Set up test"""
        super().setUp()
        self.runner = CliRunner()

    def invoke(self, *args):
        return self.runner.invoke(cli, list(args), catch_exceptions=False)

    def test_constant_closed3(self):
        """Test the closed constant as JSON"""
        result = self.invoke(
            "constant", "--rho", "0.5", "--method", "closed3", "--format", "json", "--jobs", "1"
        )
        self.assertEqual(result.exit_code, 0, result.output)
        records = json.loads(result.output)
        self.assertEqual(len(records), 1)
        self.assertAlmostEqual(records[0]["value"], RADIAL_HALF, places=6)
        self.assertEqual(records[0]["method"], "closed3")

    def test_constant_csv_output(self):
        """Test the CSV layout with its header line"""
        result = self.invoke("constant", "--rho", "0.1,0.5", "--alpha", "0.3", "--jobs", "1")
        self.assertEqual(result.exit_code, 0, result.output)
        lines = result.output.strip().splitlines()
        self.assertTrue(lines[0].startswith("# sharpgrad"))
        self.assertEqual(lines[1], "n,rho,alpha,method,value,error_bound,converged")
        self.assertEqual(len(lines), 4)

    def test_invalid_input_exits_with_usage_error(self):
        """Test that out-of-range points and malformed grids exit with status 2"""
        self.assertEqual(self.invoke("constant", "--rho", "1.2", "--jobs", "1").exit_code, 2)
        self.assertEqual(self.invoke("constant", "--rho", "0:1:0", "--jobs", "1").exit_code, 2)
        result = self.invoke(
            "constant", "--rho", "0.5", "--alpha", "0.3", "--method", "closed3", "--jobs", "1"
        )
        self.assertEqual(result.exit_code, 2)
        self.assertEqual(self.invoke("verify", "--suite", "lemma9").exit_code, 2)

    def test_scan(self):
        """Test the alpha profile with the majorant overlay"""
        result = self.invoke(
            "scan", "--rho", "0.5", "--alpha", "0:1.5707963267948966:5", "--format", "json",
            "--jobs", "1",
        )
        self.assertEqual(result.exit_code, 0, result.output)
        rows = json.loads(result.output)
        self.assertEqual(len(rows), 5)
        self.assertTrue(all(row["gap"] >= -1e-9 for row in rows))
        self.assertAlmostEqual(rows[0]["C"], RADIAL_HALF, places=6)

    def test_scan_at_small_radius(self):
        """Test that the majorant overlay stays above the profile next to the center"""
        result = self.invoke(
            "scan", "--rho", "1e-6", "--alpha", "0,0.5", "--format", "json", "--jobs", "1"
        )
        self.assertEqual(result.exit_code, 0, result.output)
        rows = json.loads(result.output)
        self.assertEqual(len(rows), 2)
        self.assertTrue(all(row["gap"] >= -1e-8 for row in rows))
        self.assertAlmostEqual(rows[1]["majorant_scaled"], 1.5, delta=1e-9)

    def test_verify(self):
        """Test running a suite from the command line"""
        result = self.invoke("verify", "--suite", "lemma6", "--kmax", "10", "--jobs", "1")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("suite,case,gap,passed", result.output)

    def test_verify_with_large_kmax(self):
        """Test that the certificate runs past the float range of the scaled coefficient"""
        result = self.invoke(
            "verify", "--suite", "lemma6", "--kmax", "500", "--format", "json", "--jobs", "1"
        )
        self.assertEqual(result.exit_code, 0, result.output)
        records = json.loads(result.output)
        self.assertTrue(all(r["passed"] and r["failed_k"] == [] for r in records))

    def test_output_is_reproducible(self):
        """Test that two identical invocations print identical results"""
        args = ("constant", "--rho", "0.3,0.6", "--alpha", "0.4", "--format", "json", "--jobs")
        self.assertEqual(self.invoke(*args, "1").output, self.invoke(*args, "2").output)

    def test_anchors(self):
        """Test the anchor table"""
        result = self.invoke("anchors", "--n", "2:4", "--format", "json")
        self.assertEqual(result.exit_code, 0, result.output)
        records = json.loads(result.output)
        self.assertEqual([r["n"] for r in records], [2, 3, 4])
        self.assertIsNone(records[0]["representation_at_center"])
        self.assertAlmostEqual(records[1]["center_constant"], 1.5, places=12)
        self.assertAlmostEqual(records[1]["representation_at_center"], 1.5, delta=1e-8)


if __name__ == "__main__":
    unittest.main(verbosity=2)
