"""Limits of rational curves as the weights grow along a power-law path.

For a fixed parameter u, divide the weight vector by the fastest growth
rate t^{max e}: the surviving terms are exactly those of the highest
dominance group whose weighted basis sum at u is positive, and the curve
point converges to that group's own rational combination

    sum_{j in G} N_j(u) k_j p_j / sum_{j in G} N_j(u) k_j.

On the open span every active basis function is strictly positive, so
the same group wins everywhere inside and the limit curve is a single
rational expression there.  At a span endpoint some basis values vanish
exactly; the corresponding indices drop out, and if an entire group's
basis support vanishes the next group takes over.  That descent rule is
what produces the endpoint exceptions (the limit can jump to an end
control point even when interior weights grow fastest).

Uniform (sup-norm) convergence additionally needs the dominant basis
support to stay bounded away from zero on the whole closed span, which
holds when the relevant knots are strictly increasing and the dominant
group avoids the two boundary indices i-p and i.  ``omega_threshold``
quantifies the rate: it returns the weight level beyond which the
dominant rational basis value is within a requested epsilon of one
everywhere on the span.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PreconditionError, UniformConditionError, ValidationError
from .spline_core import NurbsCurveConfig, basis_functions
from .weight_paths import DominanceGroups, WeightPath, dominance_groups

# Relative inward offset used to evaluate one-sided endpoint limits of the
# interior formula when it is 0/0 exactly at the endpoint.
_ENDPOINT_NUDGE = 1e-9


@dataclass
class EffectiveGroup:
    """The indices that actually carry a limit value at some u."""

    exponent: float
    indices: np.ndarray
    coefficients: np.ndarray


@dataclass
class UniformConditionReport:
    """Outcome of the uniform-convergence hypothesis check."""

    holds: bool
    reasons: list[str]


def _select_group(
    cfg: NurbsCurveConfig, groups: DominanceGroups, basis: np.ndarray
) -> EffectiveGroup:
    """Highest group with positive weighted basis sum, vanishing members dropped."""
    first = cfg.span_index - cfg.degree
    last = cfg.span_index
    for group in groups:
        in_active = (group.indices >= first) & (group.indices <= last)
        if not np.any(in_active):
            continue
        idx = group.indices[in_active]
        nonzero = basis[idx - first] > 0.0
        if np.any(nonzero):
            return EffectiveGroup(
                exponent=group.exponent,
                indices=idx[nonzero],
                coefficients=group.coefficients[in_active][nonzero],
            )
    raise RuntimeError(
        "no dominance group has positive basis support; partition of unity violated"
    )


def _group_point(cfg: NurbsCurveConfig, group: EffectiveGroup, basis: np.ndarray) -> np.ndarray:
    first = cfg.span_index - cfg.degree
    weighted = basis[group.indices - first] * group.coefficients
    weighted = weighted / weighted.sum()
    return weighted @ cfg.control_points[group.indices]


def pointwise_limit(cfg: NurbsCurveConfig, path: WeightPath, u: float) -> np.ndarray:
    """Limit of the curve point at ``u`` as t grows along ``path``.

    Applies the dominance-descent rule described in the module docstring;
    at span endpoints this automatically defers past groups whose basis
    support vanishes there.
    """
    _check_path_length(cfg, path)
    basis = basis_functions(cfg.knot_vector, cfg.span_index, u).values
    group = _select_group(cfg, dominance_groups(path), basis)
    return _group_point(cfg, group, basis)


def limit_curve(cfg: NurbsCurveConfig, path: WeightPath) -> "LimitCurve":
    """Build the piecewise evaluator for the limit over the closed span."""
    _check_path_length(cfg, path)
    groups = dominance_groups(path)
    lo, hi = cfg.span

    def group_at(u):
        return _select_group(
            cfg, groups, basis_functions(cfg.knot_vector, cfg.span_index, u).values
        )

    return LimitCurve(
        config=cfg,
        interior_group=group_at(0.5 * (lo + hi)),
        start_group=group_at(lo),
        end_group=group_at(hi),
    )


@dataclass
class LimitCurve:
    """Evaluator for the limit curve on one closed span.

    ``interior_group`` rules the open span; ``start_group`` and
    ``end_group`` are the effective groups at the two endpoints after
    discarding indices whose basis vanishes there (possibly deferring to
    a lower group entirely).
    """

    config: NurbsCurveConfig
    interior_group: EffectiveGroup
    start_group: EffectiveGroup
    end_group: EffectiveGroup

    def group_at(self, u: float) -> EffectiveGroup:
        lo, hi = self.config.span
        if not (lo <= u <= hi):
            raise DomainError(f"u={u} outside active span [{lo}, {hi}]")
        if u == lo:
            return self.start_group
        if u == hi:
            return self.end_group
        return self.interior_group

    def __call__(self, u: float) -> np.ndarray:
        basis = basis_functions(self.config.knot_vector, self.config.span_index, u).values
        return _group_point(self.config, self.group_at(u), basis)

    def interior_value(self, u: float) -> np.ndarray:
        """The open-span formula, extended to the endpoints by one-sided limit.

        When the interior group's basis support vanishes exactly at an
        endpoint the formula is 0/0 there; the value is then taken a tiny
        step inside the span, which reproduces the one-sided limit to
        within the step size (exactly, for a single-index group).
        """
        lo, hi = self.config.span
        if not (lo <= u <= hi):
            raise DomainError(f"u={u} outside active span [{lo}, {hi}]")
        cfg = self.config
        group = self.interior_group
        basis = basis_functions(cfg.knot_vector, cfg.span_index, u).values
        first = cfg.span_index - cfg.degree
        weighted = basis[group.indices - first] * group.coefficients
        total = weighted.sum()
        if total > 0.0:
            return (weighted / total) @ cfg.control_points[group.indices]
        step = _ENDPOINT_NUDGE * (hi - lo)
        return self.interior_value(u + step if u == lo else u - step)


def check_uniform_conditions(cfg: NurbsCurveConfig, path: WeightPath) -> UniformConditionReport:
    """Check the hypotheses under which the limit is uniform on the closed span.

    The knots feeding the active basis functions (indices i-p .. i+p+1)
    must be strictly increasing, and the dominant group must avoid the
    boundary indices i-p and i, whose basis vanishes at a span endpoint.
    """
    _check_path_length(cfg, path)
    reasons: list[str] = []
    i = cfg.span_index
    p = cfg.degree
    relevant = cfg.knot_vector.knots[i - p : i + p + 2]
    if np.any(np.diff(relevant) <= 0):
        reasons.append("non-strict knots")
    dominant = _dominant_active_group(cfg, path)
    if (i - p) in dominant.indices:
        reasons.append("i-p in dominant group")
    if i in dominant.indices:
        reasons.append("i in dominant group")
    return UniformConditionReport(holds=not reasons, reasons=reasons)


def uniform_limit_curve(cfg: NurbsCurveConfig, path: WeightPath) -> LimitCurve:
    """The single-formula limit curve, valid when the uniform conditions hold.

    Raises:
        UniformConditionError: with the offending report when they do not.
    """
    report = check_uniform_conditions(cfg, path)
    if not report.holds:
        raise UniformConditionError(report)
    # Under the conditions no dominant basis value vanishes anywhere on the
    # closed span, so the endpoint rules coincide with the interior rule.
    return limit_curve(cfg, path)


def omega_threshold(
    cfg: NurbsCurveConfig,
    dominant_index: int,
    epsilon: float,
    grid_size: int = 2001,
) -> float:
    """Weight level beyond which the dominant rational basis is within epsilon of 1.

    With M the span maximum of the competing weighted basis sum (using the
    config's base weights) and m the span minimum of the dominant basis
    function, any dominant weight above M / (epsilon * m) keeps
    |R_dominant - 1| < epsilon everywhere on the span.  Both extrema are
    estimated on a uniform grid of ``grid_size`` points; they are extrema
    of piecewise polynomials of degree <= p, so a dense grid suffices
    (pass a larger ``grid_size`` to refine).

    Raises:
        PreconditionError: dominant index on the span boundary, or its
            basis vanishes somewhere on the grid.
    """
    if not np.isfinite(epsilon) or epsilon <= 0:
        raise ValidationError(f"epsilon must be positive, got {epsilon}")
    if grid_size < 2:
        raise ValidationError("grid_size must be at least 2")
    i = cfg.span_index
    p = cfg.degree
    k = int(dominant_index)
    if not (i - p <= k <= i):
        raise PreconditionError(f"dominant index {k} not active on span {i}")
    if k == i - p or k == i:
        raise PreconditionError(
            f"dominant index {k} is a span-boundary index; its basis vanishes at an endpoint"
        )
    lo, hi = cfg.span
    local = k - (i - p)
    others = np.arange(p + 1) != local
    fixed = cfg.base_weights[i - p : i + 1][others]
    competing_max = 0.0
    dominant_min = np.inf
    for u in np.linspace(lo, hi, grid_size):
        values = basis_functions(cfg.knot_vector, i, u).values
        competing_max = max(competing_max, float(values[others] @ fixed))
        dominant_min = min(dominant_min, float(values[local]))
    if dominant_min <= 0.0:
        raise PreconditionError(
            f"basis of dominant index {k} vanishes on the span (min {dominant_min}); "
            "strictly increasing knots with an interior dominant index are required"
        )
    return competing_max / (epsilon * dominant_min)


def _dominant_active_group(cfg: NurbsCurveConfig, path: WeightPath) -> EffectiveGroup:
    """Highest group with any member active on the span (basis ignored)."""
    first = cfg.span_index - cfg.degree
    last = cfg.span_index
    for group in dominance_groups(path):
        in_active = (group.indices >= first) & (group.indices <= last)
        if np.any(in_active):
            return EffectiveGroup(
                exponent=group.exponent,
                indices=group.indices[in_active],
                coefficients=group.coefficients[in_active],
            )
    raise RuntimeError("no dominance group intersects the active indices")


def _check_path_length(cfg: NurbsCurveConfig, path: WeightPath) -> None:
    if len(path) != cfg.knot_vector.n_basis:
        raise ValidationError(
            f"weight path covers {len(path)} indices, curve has {cfg.knot_vector.n_basis}"
        )
