"""The joint weight limit does not exist: it depends on the path.

Send the same two weights to infinity twice -- once in lockstep, once
with one of them squared -- and the curve converges to two different
points.  Since a genuine multivariable limit would have to agree along
every path, a positive separation is a witness that no such limit
exists.
"""

import numpy as np

import nurbslimits as nl


def main():
    kv = nl.KnotVector(knots=[0, 0, 0, 0, 1, 1, 1, 1], degree=3)
    points = np.array([[j, j * j] for j in range(4)], dtype=float)
    cfg = nl.NurbsCurveConfig(
        knot_vector=kv, control_points=points, base_weights=[1, 1, 1, 1], span_index=3
    )

    lockstep = nl.WeightPath(coefficients=[1, 1, 1, 1], exponents=[0, 1, 1, 0])
    squared = nl.WeightPath(coefficients=[1, 1, 1, 1], exponents=[0, 1, 2, 0])

    result = nl.path_dependence_demo(cfg, lockstep, squared, 0.5)
    print("u = 0.5")
    print(f"  limit along (1, t, t,   1): ({result.limit_a[0]:.6f}, {result.limit_a[1]:.6f})"
          "   <- midpoint of p1, p2")
    print(f"  limit along (1, t, t^2, 1): ({result.limit_b[0]:.6f}, {result.limit_b[1]:.6f})"
          "   <- p2 itself")
    print(f"  separation: {result.separation:.10f}  (sqrt(2.5) = {np.sqrt(2.5):.10f})")

    print()
    print("finite-t check that both rows above are where the curve actually goes:")
    for t in (1e4, 1e8, 1e12):
        a = nl.eval_nurbs(cfg, nl.weights_at(lockstep, t, normalized=True), 0.5)
        b = nl.eval_nurbs(cfg, nl.weights_at(squared, t, normalized=True), 0.5)
        print(f"  t = {t:>10.0e}   lockstep ({a[0]:.8f}, {a[1]:.8f})   "
              f"squared ({b[0]:.8f}, {b[1]:.8f})")


if __name__ == "__main__":
    main()
