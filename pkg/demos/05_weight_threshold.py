"""How large does a weight have to be before it effectively owns the curve?

For a single growing weight on strictly increasing knots, the dominant
rational basis value R_k satisfies |R_k - 1| < eps uniformly on the span
once w_k exceeds M / (eps * m), where M bounds the competition and m is
the dominant basis minimum.  This demo computes the threshold for a few
eps values and verifies the guarantee on a dense grid.
"""

import numpy as np

import nurbslimits as nl


def main():
    kv = nl.KnotVector(knots=[0, 1, 2, 3, 4, 5, 6, 7], degree=3)
    points = np.array([[j, j * j] for j in range(4)], dtype=float)
    cfg = nl.NurbsCurveConfig(
        knot_vector=kv, control_points=points, base_weights=[1, 1, 1, 1], span_index=3
    )
    dominant = 2
    grid = np.linspace(3.0, 4.0, 2001)

    print(f"dominant index {dominant} on span [3, 4], other weights fixed at 1")
    print(f"  {'eps':>8}  {'threshold':>12}  {'max |R - 1| at 1.01*threshold':>30}")
    for eps in (1e-1, 1e-2, 1e-3, 1e-4):
        threshold = nl.omega_threshold(cfg, dominant, eps)
        weights = np.array([1.0, 1.0, 1.01 * threshold, 1.0])
        achieved = max(abs(nl.rational_basis(cfg, weights, u)[dominant] - 1.0) for u in grid)
        print(f"  {eps:>8.0e}  {threshold:>12.1f}  {achieved:>30.3e}")

    print()
    print("the threshold scales like 1/eps, and doubling the fixed weights doubles it:")
    doubled = nl.NurbsCurveConfig(
        knot_vector=kv, control_points=points, base_weights=[2, 2, 2, 2], span_index=3
    )
    t1 = nl.omega_threshold(cfg, dominant, 1e-3)
    t2 = nl.omega_threshold(doubled, dominant, 1e-3)
    print(f"  base weights 1: {t1:.1f}    base weights 2: {t2:.1f}")


if __name__ == "__main__":
    main()
