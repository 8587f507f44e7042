"""Empirical convergence measurements against the limit curve.

Errors are always Euclidean distances between the curve at finite t and
a reference limit.  The default reference is the full pointwise limit
(with its endpoint exceptions); passing ``reference="interior"``
measures against the open-span formula extended to the closed span,
which is the natural yardstick for exposing a persistent endpoint gap.

The sup norm is estimated on a uniform closed grid (an under-estimate of
the true sup, adequate for decay-rate evidence); the L1 norm uses
composite Gauss-Legendre quadrature, whose nodes never hit the span
endpoints, so measure-zero endpoint jumps do not pollute the integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ValidationError
from .limit_curves import limit_curve, pointwise_limit
from .spline_core import NurbsCurveConfig, eval_nurbs
from .weight_paths import WeightPath, weights_at

DEFAULT_GRID_SIZE = 2001
DEFAULT_SUBDIVISIONS = 64
QUADRATURE_NODES = 16
#: Sweep rows with t below this are dropped from log-log rate fits
#: (pre-asymptotic transients would pollute the slope).
FIT_T_MIN = 100.0


@dataclass
class ConvergenceReport:
    """Sup- and L1-errors per t value of one sweep, plus the settings used."""

    schedule: np.ndarray
    sup_errors: np.ndarray
    l1_errors: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.schedule = np.asarray(self.schedule, dtype=np.float64)
        self.sup_errors = np.asarray(self.sup_errors, dtype=np.float64)
        self.l1_errors = np.asarray(self.l1_errors, dtype=np.float64)
        if not (self.schedule.size == self.sup_errors.size == self.l1_errors.size):
            raise ValidationError("report rows must align 1:1 with the schedule")


@dataclass
class PathDependenceResult:
    """Limits along two paths at one u, and their Euclidean separation."""

    u: float
    limit_a: np.ndarray
    limit_b: np.ndarray
    separation: float


def default_schedule(t_min: float = 10.0, t_max: float = 1e8, points_per_decade: int = 1) -> np.ndarray:
    """Geometric t schedule from t_min to t_max."""
    if t_min <= 0 or t_max <= t_min:
        raise ValidationError("need 0 < t_min < t_max")
    if points_per_decade < 1:
        raise ValidationError("points_per_decade must be >= 1")
    decades = np.log10(t_max / t_min)
    count = int(round(decades * points_per_decade)) + 1
    return t_min * 10.0 ** (np.arange(count) / points_per_decade)


def _reference_fn(cfg: NurbsCurveConfig, path: WeightPath, reference: str):
    lc = limit_curve(cfg, path)
    if reference == "pointwise":
        return lc
    if reference == "interior":
        return lc.interior_value
    raise ValidationError(f"unknown limit reference {reference!r}")


def pointwise_error(cfg: NurbsCurveConfig, path: WeightPath, t: float, u: float) -> float:
    """Distance between the curve at t and the pointwise limit, at one u."""
    point = eval_nurbs(cfg, weights_at(path, t, normalized=True), u)
    return float(np.linalg.norm(point - pointwise_limit(cfg, path, u)))


def sup_error(
    cfg: NurbsCurveConfig,
    path: WeightPath,
    t: float,
    grid_size: int = DEFAULT_GRID_SIZE,
    reference: str = "pointwise",
) -> float:
    """Max error over a uniform closed grid on the active span."""
    if grid_size < 2:
        raise ValidationError("grid_size must be at least 2")
    ref = _reference_fn(cfg, path, reference)
    weights = weights_at(path, t, normalized=True)
    lo, hi = cfg.span
    worst = 0.0
    for u in np.linspace(lo, hi, grid_size):
        err = float(np.linalg.norm(eval_nurbs(cfg, weights, u) - ref(u)))
        if err > worst:
            worst = err
    return worst


def l1_error(
    cfg: NurbsCurveConfig,
    path: WeightPath,
    t: float,
    subdivisions: int = DEFAULT_SUBDIVISIONS,
    reference: str = "pointwise",
) -> float:
    """Integral of the error over the span via composite Gauss-Legendre.

    16 nodes per subinterval; the integrand is piecewise smooth in u for
    fixed t, so the subdivision count mainly controls how well the
    near-endpoint transition layers are resolved.
    """
    if subdivisions < 1:
        raise ValidationError("subdivisions must be at least 1")
    ref = _reference_fn(cfg, path, reference)
    weights = weights_at(path, t, normalized=True)
    nodes, node_weights = np.polynomial.legendre.leggauss(QUADRATURE_NODES)
    lo, hi = cfg.span
    edges = np.linspace(lo, hi, subdivisions + 1)
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (a + b)
        half = 0.5 * (b - a)
        for x, w in zip(nodes, node_weights):
            u = mid + half * x
            total += w * half * float(np.linalg.norm(eval_nurbs(cfg, weights, u) - ref(u)))
    return total


def convergence_sweep(
    cfg: NurbsCurveConfig,
    path: WeightPath,
    schedule,
    grid_size: int = DEFAULT_GRID_SIZE,
    subdivisions: int = DEFAULT_SUBDIVISIONS,
    reference: str = "pointwise",
) -> ConvergenceReport:
    """Sup- and L1-errors for every t in the schedule.

    The schedule must be non-empty, strictly increasing, and positive.
    Output is deterministic for fixed grid and quadrature settings.
    """
    sched = np.asarray(schedule, dtype=np.float64)
    if sched.ndim != 1 or sched.size == 0:
        raise ValidationError("schedule must be a non-empty 1-d sequence")
    if np.any(sched <= 0):
        raise ValidationError("schedule values must be positive")
    if np.any(np.diff(sched) <= 0):
        raise ValidationError("schedule must be strictly increasing")
    sup = np.array([sup_error(cfg, path, t, grid_size, reference) for t in sched])
    l1 = np.array([l1_error(cfg, path, t, subdivisions, reference) for t in sched])
    metadata = {
        "grid_size": grid_size,
        "subdivisions": subdivisions,
        "quadrature_nodes": QUADRATURE_NODES,
        "reference": reference,
        "path": path.describe(),
    }
    return ConvergenceReport(schedule=sched, sup_errors=sup, l1_errors=l1, metadata=metadata)


def path_dependence_demo(
    cfg: NurbsCurveConfig, path_a: WeightPath, path_b: WeightPath, u: float
) -> PathDependenceResult:
    """Limits along two different paths at the same interior u.

    A positive separation witnesses that the joint limit over all weight
    variables does not exist: its value depends on the approach path.
    """
    lo, hi = cfg.span
    if not (lo < u < hi):
        raise DomainError(f"u={u} must lie strictly inside the span ({lo}, {hi})")
    limit_a = pointwise_limit(cfg, path_a, u)
    limit_b = pointwise_limit(cfg, path_b, u)
    return PathDependenceResult(
        u=float(u),
        limit_a=limit_a,
        limit_b=limit_b,
        separation=float(np.linalg.norm(limit_a - limit_b)),
    )


def fit_loglog_slope(schedule, errors, t_min: float = FIT_T_MIN) -> float:
    """Least-squares slope of log10(error) against log10(t) on the sweep tail.

    Rows with t < t_min or non-positive error are dropped; returns NaN
    when fewer than two usable rows remain.
    """
    t = np.asarray(schedule, dtype=np.float64)
    err = np.asarray(errors, dtype=np.float64)
    keep = (t >= t_min) & (err > 0) & np.isfinite(err)
    if np.count_nonzero(keep) < 2:
        return float("nan")
    slope, _ = np.polyfit(np.log10(t[keep]), np.log10(err[keep]), 1)
    return float(slope)
