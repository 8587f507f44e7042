"""Knot vectors, B-spline basis evaluation, and rational curve points.

The basis is evaluated with the span-local triangular recursion, which
computes exactly the ``degree + 1`` basis functions that can be nonzero
on a span.  Rational (weighted) curve points are formed by normalizing
the weighted basis into a partition of unity and taking the matching
convex combination of control points, so every evaluated point lies in
the convex hull of the active control points by construction.

Conventions:

* Spans are closed on the left and open on the right, except that the
  right end of the parameter domain maps to the last non-degenerate
  span, so the full closed domain is evaluable.
* A basis value that is mathematically zero at a knot comes out as an
  exact floating ``0.0`` (the recursion multiplies by exact zero
  factors), which downstream limit selection relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError


@dataclass
class KnotVector:
    """Non-decreasing parameter sequence plus the polynomial degree.

    Attributes:
        knots: knot values u_0..u_m, non-decreasing.
        degree: polynomial degree p >= 0.
    """

    knots: np.ndarray
    degree: int

    def __post_init__(self):
        knots = np.asarray(self.knots, dtype=np.float64)
        if knots.ndim != 1:
            raise ValidationError("knots must be a one-dimensional sequence")
        if not isinstance(self.degree, (int, np.integer)) or self.degree < 0:
            raise ValidationError("degree must be a non-negative integer")
        p = int(self.degree)
        if knots.size < 2 * (p + 1):
            raise ValidationError(
                f"need at least {2 * (p + 1)} knots for degree {p}, got {knots.size}"
            )
        diffs = np.diff(knots)
        if np.any(diffs < 0):
            bad = int(np.argmax(diffs < 0)) + 1
            raise ValidationError(f"knots not non-decreasing at index {bad}")
        if not knots[p] < knots[knots.size - 1 - p]:
            raise ValidationError(
                "parameter domain is degenerate: no non-degenerate span exists"
            )
        knots.flags.writeable = False
        self.knots = knots
        self.degree = p

    @property
    def m(self) -> int:
        """Index of the last knot."""
        return self.knots.size - 1

    @property
    def n_basis(self) -> int:
        """Number of basis functions (= number of control points), m - p."""
        return self.m - self.degree

    @property
    def domain(self) -> tuple[float, float]:
        """Valid parameter interval [u_p, u_{m-p}]."""
        return float(self.knots[self.degree]), float(self.knots[self.m - self.degree])

    @property
    def is_strict(self) -> bool:
        """True iff the knots are strictly increasing."""
        return bool(np.all(np.diff(self.knots) > 0))

    def span_interval(self, span: int) -> tuple[float, float]:
        """The interval [u_span, u_{span+1}]."""
        return float(self.knots[span]), float(self.knots[span + 1])


@dataclass
class BasisValues:
    """The degree+1 possibly-nonzero basis values on one span.

    ``values[r]`` is the basis function of index ``span - degree + r``
    evaluated at the query parameter; all other basis functions are
    implicitly zero there.
    """

    span: int
    values: np.ndarray


@dataclass
class NurbsCurveConfig:
    """A rational curve restricted to a single active span.

    Attributes:
        knot_vector: the underlying knot vector and degree.
        control_points: (n, d) array of control points, n = m - p, d >= 1.
        base_weights: (n,) positive weights used when no weight path is in
            play (and as the fixed finite weights in threshold analysis).
        span_index: index i of the active span [u_i, u_{i+1}].
    """

    knot_vector: KnotVector
    control_points: np.ndarray
    base_weights: np.ndarray
    span_index: int

    def __post_init__(self):
        points = np.asarray(self.control_points, dtype=np.float64)
        if points.ndim == 1:
            points = points.reshape(-1, 1)
        if points.ndim != 2 or points.shape[1] < 1:
            raise ValidationError("control points must form an (n, d) array with d >= 1")
        weights = np.asarray(self.base_weights, dtype=np.float64)
        if weights.ndim != 1:
            raise ValidationError("base weights must be a one-dimensional sequence")
        n = self.knot_vector.n_basis
        if points.shape[0] != n:
            raise ValidationError(
                f"expected {n} control points for this knot vector, got {points.shape[0]}"
            )
        if weights.size != n:
            raise ValidationError(
                f"expected {n} base weights for this knot vector, got {weights.size}"
            )
        if np.any(weights <= 0):
            bad = int(np.argmax(weights <= 0))
            raise ValidationError(f"base weight at index {bad} is not positive")
        p = self.knot_vector.degree
        i = int(self.span_index)
        if not (p <= i <= self.knot_vector.m - p - 1):
            raise ValidationError(
                f"span index {i} outside valid range [{p}, {self.knot_vector.m - p - 1}]"
            )
        lo, hi = self.knot_vector.span_interval(i)
        if not lo < hi:
            raise ValidationError(f"active span [{lo}, {hi}] is degenerate")
        points.flags.writeable = False
        weights.flags.writeable = False
        self.control_points = points
        self.base_weights = weights
        self.span_index = i

    @property
    def degree(self) -> int:
        return self.knot_vector.degree

    @property
    def dimension(self) -> int:
        return self.control_points.shape[1]

    @property
    def span(self) -> tuple[float, float]:
        """The active interval [u_i, u_{i+1}]."""
        return self.knot_vector.span_interval(self.span_index)

    @property
    def active_indices(self) -> np.ndarray:
        """Control-point indices i-p..i whose basis can be nonzero on the span."""
        return np.arange(self.span_index - self.degree, self.span_index + 1)

    @property
    def active_points(self) -> np.ndarray:
        return self.control_points[self.span_index - self.degree : self.span_index + 1]


def find_span(kv: KnotVector, u: float) -> int:
    """Locate the span index i with u_i <= u < u_{i+1}.

    The right end of the domain maps to the last non-degenerate span, so
    every u in the closed domain has a well-defined span.

    Raises:
        DomainError: if u lies outside [u_p, u_{m-p}].
    """
    p = kv.degree
    knots = kv.knots
    m = kv.m
    lo, hi = knots[p], knots[m - p]
    if not (lo <= u <= hi):
        raise DomainError(f"u={u} outside parameter domain [{lo}, {hi}]")
    if u >= hi:
        i = m - p - 1
        while knots[i + 1] <= knots[i]:
            i -= 1
        return i
    return int(np.searchsorted(knots, u, side="right")) - 1


def basis_functions(kv: KnotVector, span: int, u: float) -> BasisValues:
    """Evaluate the degree+1 basis functions supported on ``span`` at ``u``.

    ``u`` may be anywhere in the closed interval [u_span, u_{span+1}]; the
    values are those of the span's polynomial pieces, so evaluating at the
    right endpoint gives the one-sided limit from inside the span.

    Raises:
        DomainError: invalid or degenerate span, or u outside the closed span.
    """
    p = kv.degree
    knots = kv.knots
    m = kv.m
    if not (p <= span <= m - p - 1):
        raise DomainError(f"span {span} outside valid range [{p}, {m - p - 1}]")
    lo, hi = knots[span], knots[span + 1]
    if not lo < hi:
        raise DomainError(f"span {span} is degenerate ([{lo}, {hi}])")
    if not (lo <= u <= hi):
        raise DomainError(f"u={u} outside span {span} interval [{lo}, {hi}]")

    values = np.empty(p + 1)
    left = np.empty(p + 1)
    right = np.empty(p + 1)
    values[0] = 1.0
    for j in range(1, p + 1):
        left[j] = u - knots[span + 1 - j]
        right[j] = knots[span + j] - u
        saved = 0.0
        for r in range(j):
            # Denominator is >= span length > 0 for a non-degenerate span.
            temp = values[r] / (right[r + 1] + left[j - r])
            values[r] = saved + right[r + 1] * temp
            saved = left[j - r] * temp
        values[j] = saved
    return BasisValues(span=span, values=values)


def _checked_weights(cfg: NurbsCurveConfig, weights) -> np.ndarray:
    w = np.asarray(weights, dtype=np.float64)
    if w.shape != (cfg.knot_vector.n_basis,):
        raise ValidationError(
            f"expected {cfg.knot_vector.n_basis} weights, got shape {w.shape}"
        )
    if np.any(w <= 0) or not np.all(np.isfinite(w)):
        raise ValidationError("weights must all be positive and finite")
    return w


def rational_basis(cfg: NurbsCurveConfig, weights, u: float) -> np.ndarray:
    """Weighted basis normalized to a partition of unity on the active span.

    Returns the degree+1 values N_j(u) w_j / sum_r N_r(u) w_r for
    j = i-p..i.  They are non-negative and sum to one.
    """
    w = _checked_weights(cfg, weights)
    basis = basis_functions(cfg.knot_vector, cfg.span_index, u)
    active = w[cfg.span_index - cfg.degree : cfg.span_index + 1]
    weighted = basis.values * active
    return weighted / weighted.sum()


def eval_nurbs(cfg: NurbsCurveConfig, weights, u: float) -> np.ndarray:
    """Evaluate the rational curve point at ``u`` with the given weights.

    The result is the convex combination of the active control points by
    the rational basis, hence always inside their convex hull.  Weights
    enter only through ratios, so any common rescaling of the weight
    vector leaves the point unchanged.
    """
    rb = rational_basis(cfg, weights, u)
    return rb @ cfg.active_points
