"""Independent oracles and random case generators shared by the tests.

The oracles deliberately avoid the library's span-local evaluation path:
the basis oracle is the textbook one-function-at-a-time recursion (with
the 0/0 -> 0 convention), and the limit oracle is plain evaluation at a
growing sequence of t values with a Cauchy check.
"""

import math

import numpy as np

import nurbslimits as nl


def naive_basis(knots, degree, index, u):
    """Recursive basis value N_{index,degree}(u), half-open span convention.

    At the very last knot the final span is treated as closed so clamped
    domain ends evaluate to 1 instead of 0.
    """
    knots = np.asarray(knots, dtype=float)
    if degree == 0:
        if knots[index] <= u < knots[index + 1]:
            return 1.0
        if (
            u == knots[-1]
            and knots[index + 1] == knots[-1]
            and knots[index] < knots[index + 1]
        ):
            return 1.0
        return 0.0
    total = 0.0
    left_den = knots[index + degree] - knots[index]
    if left_den > 0:
        total += (u - knots[index]) / left_den * naive_basis(knots, degree - 1, index, u)
    right_den = knots[index + degree + 1] - knots[index + 1]
    if right_den > 0:
        total += (
            (knots[index + degree + 1] - u)
            / right_den
            * naive_basis(knots, degree - 1, index + 1, u)
        )
    return total


def bernstein(degree, index, u):
    """Closed-form Bernstein polynomial on [0, 1]."""
    return math.comb(degree, index) * u**index * (1.0 - u) ** (degree - index)


def brute_force_limit(cfg, path, u, t_values=(1e2, 1e4, 1e6, 1e8, 1e10, 1e12)):
    """Limit estimate by direct evaluation at growing t, with a Cauchy check."""
    points = [
        nl.eval_nurbs(cfg, nl.weights_at(path, t, normalized=True), u) for t in t_values
    ]
    gaps = [float(np.linalg.norm(b - a)) for a, b in zip(points[:-1], points[1:])]
    assert gaps[-1] <= 1e-8, f"no Cauchy convergence: gaps {gaps}"
    return points[-1]


# ---------------------------------------------------------------------------
# random case generators


def random_knot_vector(rng, max_degree=4):
    """Clamped, strictly increasing, or repeated-knot vectors, degree 1..max_degree."""
    degree = int(rng.integers(1, max_degree + 1))
    count = degree + 1 + int(rng.integers(0, 5))
    total = count + degree + 1
    style = int(rng.integers(0, 3))
    if style == 0:
        interior = np.sort(rng.uniform(0.0, 10.0, total - 2 * (degree + 1)))
        knots = np.concatenate(
            [np.zeros(degree + 1), interior, np.full(degree + 1, 10.0)]
        )
    elif style == 1:
        knots = np.sort(rng.uniform(0.0, 10.0, total))
        while np.any(np.diff(knots) <= 1e-3):
            knots = np.sort(rng.uniform(0.0, 10.0, total))
    else:
        knots = np.sort(np.round(rng.uniform(0.0, 10.0, total) * 2.0) / 2.0)
        try:
            return nl.KnotVector(knots=knots, degree=degree)
        except nl.ValidationError:
            return random_knot_vector(rng, max_degree)
    return nl.KnotVector(knots=knots, degree=degree)


def nondegenerate_spans(kv):
    return [
        i
        for i in range(kv.degree, kv.m - kv.degree)
        if kv.knots[i] < kv.knots[i + 1]
    ]


def random_config(rng, max_degree=4, dim_range=(1, 3), coord_scale=5.0):
    kv = random_knot_vector(rng, max_degree)
    spans = nondegenerate_spans(kv)
    span = spans[int(rng.integers(0, len(spans)))]
    n = kv.n_basis
    dim = int(rng.integers(dim_range[0], dim_range[1] + 1))
    points = rng.uniform(-coord_scale, coord_scale, (n, dim))
    weights = rng.uniform(0.2, 5.0, n)
    return nl.NurbsCurveConfig(
        knot_vector=kv, control_points=points, base_weights=weights, span_index=span
    )


def random_path(rng, n, exponent_step=1.0):
    """Exponents in {0, step, 2*step, 3*step}, at least one positive."""
    exponents = exponent_step * rng.integers(0, 4, n).astype(float)
    if not np.any(exponents > 0):
        exponents[int(rng.integers(0, n))] = exponent_step
    return nl.WeightPath(
        coefficients=rng.uniform(0.5, 2.0, n), exponents=exponents
    )
