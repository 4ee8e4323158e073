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
"""Command-line tools"""
import csv
import io
import json
import logging
from functools import partial
from typing import Any, Dict, List, Optional, Sequence

import click

from common import EInvalidGridSpec, parse_grid, parse_int_grid
from config import Config

from . import __version__, setup_logging
from .constants import (
    ConstantEstimate,
    Method,
    ProblemPoint,
    center_constant,
    closed3_estimate,
    directional_constant,
    halfspace_constant,
)
from .dispatch import GridDispatcher
from .exceptions import EAccuracyError, EDomainError
from .majorant3 import majorant
from .oracle import constant_oracle_direct, constant_oracle_moebius
from .suites import SuiteOptions, registry

logger = logging.getLogger(__name__)

CENTER_RHO = 1e-10


class GridParamType(click.ParamType):
    """A value, a comma-separated list or a "start:stop:count" grid"""

    name = "grid"

    def __init__(self, integer: bool = False):
        self.integer = integer

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            return parse_int_grid(value) if self.integer else parse_grid(value)
        except EInvalidGridSpec as exc:
            self.fail(str(exc), param, ctx)
        return None


GRID = GridParamType()
INT_GRID = GridParamType(integer=True)


def _format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def emit(records: List[Dict[str, Any]], columns: Sequence[str], fmt: str, header: str) -> None:
    """Writes records to stdout as CSV with a '#' metadata line, or as a JSON array"""
    if fmt == "json":
        click.echo(json.dumps(records, indent=2))
        return
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for record in records:
        writer.writerow([_format_value(record.get(column)) for column in columns])
    click.echo(f"# sharpgrad {__version__} {header}")
    click.echo(buffer.getvalue(), nl=False)


def _config_echo(**kwargs) -> str:
    return " ".join(f"{key}={_format_value(value)}" for key, value in kwargs.items())


def _points(
    ns: Sequence[int], rhos: Sequence[float], alphas: Sequence[float]
) -> List[ProblemPoint]:
    points = [ProblemPoint(n, rho, alpha) for n in ns for rho in rhos for alpha in alphas]
    try:
        for pt in points:
            pt.validate()
    except EDomainError as exc:
        raise click.BadParameter(str(exc)) from exc
    return points


def evaluate_constant(method: Method, tol: float, refinement: int, pt: ProblemPoint):
    """Sharp constant at a point by the selected method"""
    if method is Method.REPRESENTATION:
        return directional_constant(pt, tol)
    if method is Method.ORACLE_DIRECT:
        return constant_oracle_direct(pt, refinement, tol)
    if method is Method.ORACLE_MOEBIUS:
        return constant_oracle_moebius(pt, refinement, tol)
    estimate: Optional[ConstantEstimate] = closed3_estimate(pt)
    if estimate is None:
        raise EDomainError("closed3 is defined for n = 3 and alpha = 0 only", point=tuple(pt))
    return estimate


def _run_grid(jobs: int, fn, points: list) -> list:
    try:
        return GridDispatcher(jobs).map(fn, points)
    except EDomainError as exc:
        raise click.UsageError(str(exc)) from exc


def _common_options(f):
    f = click.option(
        "--seed", type=int, default=None, help="Reserved, all methods are deterministic"
    )(f)
    f = click.option(
        "--jobs", type=int, default=Config.JOBS, show_default=True, help="Worker processes"
    )(f)
    f = click.option(
        "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True
    )(f)
    f = click.option("--tol", type=float, default=Config.TOL, show_default=True)(f)
    return f


@click.group()
@click.option("--log-level", default=None, help="Overrides SHARPGRAD_LOG_LEVEL")
@click.version_option(__version__)
def cli(log_level: Optional[str]):
    """Sharp constants in the gradient estimate for bounded harmonic functions"""
    setup_logging(Config, log_level)


@cli.command("constant")
@click.option("--n", "ns", type=INT_GRID, default="3", show_default=True)
@click.option("--rho", "rhos", type=GRID, required=True)
@click.option("--alpha", "alphas", type=GRID, default="0", show_default=True)
@click.option(
    "--method",
    type=click.Choice([m.value for m in Method]),
    default=Method.REPRESENTATION.value,
    show_default=True,
)
@click.option("--refinement", type=click.IntRange(min=1), default=2, show_default=True)
@_common_options
@click.pass_context
def cmd_constant(ctx, ns, rhos, alphas, method, refinement, tol, fmt, jobs, seed):
    """Sharp directional constant C(rho e_1, l_alpha) on a grid of points"""
    points = _points(ns, rhos, alphas)
    chosen = Method(method)
    if chosen is Method.CLOSED3 and any(pt.n != 3 or pt.alpha != 0 for pt in points):
        raise click.BadParameter("closed3 requires --n 3 --alpha 0", param_hint="--method")
    try:
        estimates = _run_grid(jobs, partial(evaluate_constant, chosen, tol, refinement), points)
    except EAccuracyError as exc:
        logger.error("Evaluation failed: %s", exc)
        ctx.exit(1)
    records = [
        {
            "n": pt.n,
            "rho": pt.rho,
            "alpha": pt.alpha,
            "method": e.method.value,
            "value": e.value,
            "error_bound": e.error_bound,
            "converged": e.converged,
        }
        for pt, e in zip(points, estimates)
    ]
    emit(
        records,
        ("n", "rho", "alpha", "method", "value", "error_bound", "converged"),
        fmt,
        _config_echo(command="constant", method=method, tol=tol, refinement=refinement),
    )
    if not all(e.converged for e in estimates):
        ctx.exit(1)


def _scan_row(tol: float, n: int, pt: ProblemPoint) -> Dict[str, Any]:
    estimate = directional_constant(pt, tol)
    row: Dict[str, Any] = {
        "rho": pt.rho,
        "alpha": pt.alpha,
        "n": n,
        "C": estimate.value,
        "majorant_scaled": None,
        "gap": None,
        "error_bound": estimate.error_bound,
        "converged": estimate.converged,
    }
    if n == 3:
        scaled = 3 / (2 * (1 - pt.rho * pt.rho)) * majorant(pt.rho, pt.alpha).M
        row["majorant_scaled"] = scaled
        row["gap"] = scaled - estimate.value
    return row


@cli.command("scan")
@click.option("--n", type=click.IntRange(min=3), default=3, show_default=True)
@click.option("--rho", "rhos", type=GRID, required=True)
@click.option("--alpha", "alphas", type=GRID, default="0:1.5707963267948966:65", show_default=True)
@_common_options
@click.pass_context
def cmd_scan(ctx, n, rhos, alphas, tol, fmt, jobs, seed):
    """Alpha profile of the directional constant with the majorant overlay (n = 3)"""
    points = _points([n], rhos, alphas)
    try:
        rows = _run_grid(jobs, partial(_scan_row, tol, n), points)
    except EAccuracyError as exc:
        logger.error("Scan failed: %s", exc)
        ctx.exit(1)
    emit(
        rows,
        ("rho", "alpha", "n", "C", "majorant_scaled", "gap"),
        fmt,
        _config_echo(command="scan", n=n, tol=tol),
    )
    below = [r for r in rows if r["gap"] is not None and r["gap"] < -(tol + r["error_bound"])]
    for row in below:
        logger.error("Majorant below the constant at rho=%g alpha=%g", row["rho"], row["alpha"])
    if below or not all(r["converged"] for r in rows):
        ctx.exit(1)


@cli.command("verify")
@click.option(
    "--suite", type=click.Choice(registry.names + ["all"]), default="all", show_default=True
)
@click.option("--n", "ns", type=INT_GRID, default="3:6", show_default=True)
@click.option("--kmax", type=click.IntRange(min=2), default=200, show_default=True)
@_common_options
@click.pass_context
def cmd_verify(ctx, suite, ns, kmax, tol, fmt, jobs, seed):
    """Runs a verification suite and reports every case"""
    options = SuiteOptions(tuple(ns), kmax, tol, jobs)
    try:
        cases = registry.run(suite, options)
    except EDomainError as exc:
        raise click.UsageError(str(exc)) from exc
    except EAccuracyError as exc:
        logger.error("Suite %s failed: %s", suite, exc)
        ctx.exit(1)
    if fmt == "json":
        records = [
            dict({"suite": c.suite}, **c.inputs, gap=c.gap, passed=c.passed) for c in cases
        ]
    else:
        records = [
            {
                "suite": c.suite,
                "case": ";".join(f"{k}={_format_value(v)}" for k, v in c.inputs.items()),
                "gap": c.gap,
                "passed": c.passed,
            }
            for c in cases
        ]
    emit(
        records,
        ("suite", "case", "gap", "passed"),
        fmt,
        _config_echo(command="verify", suite=suite, kmax=kmax, tol=tol),
    )
    if not all(c.passed for c in cases):
        ctx.exit(1)


@cli.command("anchors")
@click.option("--n", "ns", type=INT_GRID, default="2:6", show_default=True)
@click.option("--tol", type=float, default=Config.TOL, show_default=True)
@click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True
)
def cmd_anchors(ns, tol, fmt):
    """Center and half-space constants, and the representation near the center"""
    records = []
    for n in ns:
        if n < 2:
            raise click.BadParameter("Dimension must satisfy n >= 2", param_hint="--n")
        near_center = None
        if n >= 3:
            near_center = directional_constant(ProblemPoint(n, CENTER_RHO, 0.0), tol).value
        records.append(
            {
                "n": n,
                "center_constant": center_constant(n),
                "halfspace_constant": halfspace_constant(n),
                "representation_at_center": near_center,
            }
        )
    emit(
        records,
        ("n", "center_constant", "halfspace_constant", "representation_at_center"),
        fmt,
        _config_echo(command="anchors", tol=tol),
    )


def main() -> None:
    cli(prog_name="gradbound")  # pylint: disable=no-value-for-parameter
