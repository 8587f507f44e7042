import numpy as np
import pytest

import nurbslimits as nl
from nurbslimits import DomainError, PreconditionError, UniformConditionError, ValidationError

import oracles

BEZIER = nl.KnotVector(knots=[0, 0, 0, 0, 1, 1, 1, 1], degree=3)
STRICT = nl.KnotVector(knots=[0, 1, 2, 3, 4, 5, 6, 7], degree=3)
PARABOLA_POINTS = np.array([[j, j * j] for j in range(4)], dtype=float)


def make_config(kv, points=PARABOLA_POINTS):
    return nl.NurbsCurveConfig(
        knot_vector=kv, control_points=points, base_weights=[1, 1, 1, 1], span_index=3
    )


def path(exponents, coefficients=(1, 1, 1, 1)):
    return nl.WeightPath(coefficients=coefficients, exponents=exponents)


LINEAR = path([0, 1, 1, 0], coefficients=[1, 1, 3, 1])
QUADRATIC = path([0, 1, 2, 0])


class TestPointwiseLimit:
    def test_linear_coupling_endpoints(self):
        cfg = make_config(BEZIER)
        assert np.array_equal(nl.pointwise_limit(cfg, LINEAR, 0.0), PARABOLA_POINTS[0])
        assert np.array_equal(nl.pointwise_limit(cfg, LINEAR, 1.0), PARABOLA_POINTS[3])

    def test_linear_coupling_interior_blend(self):
        # dominant pair {1, 2} with coefficient ratio 1:3; N1 = N2 = 0.375
        cfg = make_config(BEZIER)
        expected = (0.375 * PARABOLA_POINTS[1] + 3 * 0.375 * PARABOLA_POINTS[2]) / (
            0.375 + 3 * 0.375
        )
        value = nl.pointwise_limit(cfg, LINEAR, 0.5)
        np.testing.assert_allclose(value, expected, atol=1e-14)
        brute = oracles.brute_force_limit(cfg, LINEAR, 0.5)
        np.testing.assert_allclose(value, brute, atol=1e-9)

    def test_quadratic_coupling_interior_is_p2(self):
        cfg = make_config(BEZIER)
        for u in (0.1, 0.5, 0.9):
            assert np.array_equal(nl.pointwise_limit(cfg, QUADRATIC, u), PARABOLA_POINTS[2])

    def test_quadratic_coupling_endpoints(self):
        cfg = make_config(BEZIER)
        assert np.array_equal(nl.pointwise_limit(cfg, QUADRATIC, 0.0), PARABOLA_POINTS[0])
        assert np.array_equal(nl.pointwise_limit(cfg, QUADRATIC, 1.0), PARABOLA_POINTS[3])

    @pytest.mark.parametrize("weight_path", [LINEAR, QUADRATIC], ids=["linear", "quadratic"])
    def test_large_t_agreement_on_grid(self, weight_path):
        cfg = make_config(BEZIER)
        weights = nl.weights_at(weight_path, 1e12, normalized=True)
        for u in np.linspace(0.0, 1.0, 101):
            deviation = np.abs(
                nl.eval_nurbs(cfg, weights, u) - nl.pointwise_limit(cfg, weight_path, u)
            ).max()
            assert deviation < 1e-6

    def test_large_t_agreement_random_family(self):
        # well-separated exponents so t = 1e12 is deep in the asymptotic regime
        rng = np.random.default_rng(41)
        for _ in range(100):
            cfg = oracles.random_config(rng)
            weight_path = oracles.random_path(rng, cfg.knot_vector.n_basis, exponent_step=2.0)
            weights = nl.weights_at(weight_path, 1e12, normalized=True)
            lo, hi = cfg.span
            for u in np.linspace(lo, hi, 11):
                deviation = np.abs(
                    nl.eval_nurbs(cfg, weights, u) - nl.pointwise_limit(cfg, weight_path, u)
                ).max()
                assert deviation < 1e-6

    def test_interior_group_constant_and_value_continuous(self):
        cfg = make_config(BEZIER)
        lc = nl.limit_curve(cfg, LINEAR)
        grid = np.linspace(0.01, 0.99, 99)
        values = [nl.pointwise_limit(cfg, LINEAR, u) for u in grid]
        for u in grid:
            assert lc.group_at(float(u)).indices.tolist() == [1, 2]
        steps = np.linalg.norm(np.diff(values, axis=0), axis=1)
        assert steps.max() < 0.1

    def test_limit_in_convex_hull(self):
        rng = np.random.default_rng(43)
        for _ in range(200):
            cfg = oracles.random_config(rng)
            weight_path = oracles.random_path(rng, cfg.knot_vector.n_basis)
            lo, hi = cfg.span
            for u in (lo, float(rng.uniform(lo, hi)), hi):
                value = nl.pointwise_limit(cfg, weight_path, u)
                active = cfg.active_points
                assert np.all(value >= active.min(axis=0) - 1e-12)
                assert np.all(value <= active.max(axis=0) + 1e-12)

    def test_path_length_mismatch_rejected(self):
        cfg = make_config(BEZIER)
        with pytest.raises(ValidationError, match="covers 2"):
            nl.pointwise_limit(cfg, nl.WeightPath(coefficients=[1, 1], exponents=[0, 1]), 0.5)


class TestLimitCurve:
    def test_effective_groups_linear(self):
        lc = nl.limit_curve(make_config(BEZIER), LINEAR)
        assert lc.interior_group.indices.tolist() == [1, 2]
        assert lc.start_group.indices.tolist() == [0]
        assert lc.end_group.indices.tolist() == [3]

    def test_effective_groups_quadratic(self):
        lc = nl.limit_curve(make_config(BEZIER), QUADRATIC)
        assert lc.interior_group.indices.tolist() == [2]
        assert lc.start_group.indices.tolist() == [0]
        assert lc.end_group.indices.tolist() == [3]

    def test_callable_matches_pointwise_limit(self):
        cfg = make_config(BEZIER)
        lc = nl.limit_curve(cfg, LINEAR)
        for u in np.linspace(0.0, 1.0, 21):
            assert np.array_equal(lc(float(u)), nl.pointwise_limit(cfg, LINEAR, float(u)))

    def test_interior_value_extends_by_continuity(self):
        cfg = make_config(BEZIER)
        lc = nl.limit_curve(cfg, QUADRATIC)
        assert np.array_equal(lc.interior_value(0.0), PARABOLA_POINTS[2])
        assert np.array_equal(lc.interior_value(1.0), PARABOLA_POINTS[2])

    def test_outside_span_raises(self):
        lc = nl.limit_curve(make_config(BEZIER), LINEAR)
        with pytest.raises(DomainError):
            lc(1.5)
        with pytest.raises(DomainError):
            lc.interior_value(-0.5)


class TestUniformConditions:
    def test_clamped_knots_fail(self):
        report = nl.check_uniform_conditions(make_config(BEZIER), path([0, 0, 1, 0]))
        assert not report.holds
        assert "non-strict knots" in report.reasons

    def test_first_active_index_dominant_fails(self):
        report = nl.check_uniform_conditions(make_config(STRICT), path([1, 0, 0, 0]))
        assert not report.holds
        assert report.reasons == ["i-p in dominant group"]

    def test_last_active_index_dominant_fails(self):
        report = nl.check_uniform_conditions(make_config(STRICT), path([0, 0, 0, 1]))
        assert not report.holds
        assert report.reasons == ["i in dominant group"]

    def test_interior_dominant_group_holds(self):
        report = nl.check_uniform_conditions(make_config(STRICT), path([0, 1, 1, 0]))
        assert report.holds
        assert report.reasons == []

    def test_uniform_limit_refuses_violations(self):
        cfg = make_config(STRICT)
        bad = path([0, 0, 0, 1])
        with pytest.raises(UniformConditionError) as excinfo:
            nl.uniform_limit_curve(cfg, bad)
        assert excinfo.value.report.reasons == ["i in dominant group"]


class TestUniformLimitCurve:
    def test_single_interior_index_gives_constant(self):
        cfg = make_config(STRICT)
        lc = nl.uniform_limit_curve(cfg, path([0, 0, 1, 0]))
        for u in (3.0, 3.25, 3.9, 4.0):
            assert np.array_equal(lc(u), PARABOLA_POINTS[2])

    def test_pair_group_matches_large_t_on_grid(self):
        cfg = make_config(STRICT)
        pair = path([0, 1, 1, 0])
        lc = nl.uniform_limit_curve(cfg, pair)
        weights = nl.weights_at(pair, 1e8, normalized=True)
        worst = max(
            np.abs(nl.eval_nurbs(cfg, weights, u) - lc(u)).max()
            for u in np.linspace(3.0, 4.0, 101)
        )
        assert worst < 1e-6

    def test_no_endpoint_case_split(self):
        lc = nl.uniform_limit_curve(make_config(STRICT), path([0, 1, 1, 0]))
        assert lc.start_group.indices.tolist() == lc.interior_group.indices.tolist()
        assert lc.end_group.indices.tolist() == lc.interior_group.indices.tolist()

    def test_agrees_with_pointwise_limit(self):
        cfg = make_config(STRICT)
        pair = path([0, 1, 1, 0])
        lc = nl.uniform_limit_curve(cfg, pair)
        for u in np.linspace(3.0, 4.0, 41):
            np.testing.assert_allclose(
                lc(float(u)), nl.pointwise_limit(cfg, pair, float(u)), atol=1e-12
            )


class TestOmegaThreshold:
    def test_uniform_cubic_threshold_value(self):
        # cubic basis on uniform knots: min N2 = 1/6, max of the competing
        # unit-weight sum = 5/6, so the bound is (5/6) / (eps/6) = 5/eps
        threshold = nl.omega_threshold(make_config(STRICT), 2, 1e-3)
        assert np.isclose(threshold, 5000.0, rtol=1e-12)

    def test_threshold_guarantee_on_grid(self):
        cfg = make_config(STRICT)
        epsilon = 1e-3
        threshold = nl.omega_threshold(cfg, 2, epsilon)
        weights = np.array([1.0, 1.0, 1.01 * threshold, 1.0])
        worst = max(
            abs(nl.rational_basis(cfg, weights, u)[2] - 1.0)
            for u in np.linspace(3.0, 4.0, 2001)
        )
        assert worst < epsilon

    def test_epsilon_scaling(self):
        cfg = make_config(STRICT)
        assert nl.omega_threshold(cfg, 2, 2e-3) == nl.omega_threshold(cfg, 2, 1e-3) / 2.0
        assert nl.omega_threshold(cfg, 2, 1e9) < 1e-6

    def test_doubling_fixed_weights_doubles_threshold(self):
        base = make_config(STRICT)
        doubled = nl.NurbsCurveConfig(
            knot_vector=STRICT,
            control_points=PARABOLA_POINTS,
            base_weights=[2, 2, 2, 2],
            span_index=3,
        )
        assert nl.omega_threshold(doubled, 2, 1e-3) == 2.0 * nl.omega_threshold(base, 2, 1e-3)

    def test_rejects_boundary_dominant_index(self):
        cfg = make_config(STRICT)
        with pytest.raises(PreconditionError, match="span-boundary"):
            nl.omega_threshold(cfg, 0, 1e-3)
        with pytest.raises(PreconditionError, match="span-boundary"):
            nl.omega_threshold(cfg, 3, 1e-3)

    def test_rejects_vanishing_dominant_basis(self):
        # on clamped knots N1 vanishes at u = 0, violating the hypothesis
        cfg = make_config(BEZIER)
        with pytest.raises(PreconditionError, match="vanishes"):
            nl.omega_threshold(cfg, 1, 1e-3)

    def test_rejects_bad_epsilon(self):
        with pytest.raises(ValidationError, match="epsilon"):
            nl.omega_threshold(make_config(STRICT), 2, 0.0)
