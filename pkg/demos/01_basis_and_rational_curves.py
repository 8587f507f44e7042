"""Basis functions and how a growing weight pulls the curve.

Evaluates the cubic basis on a clamped knot vector, checks the partition
of unity, then cranks up one weight to show the curve being dragged
toward the matching control point.
"""

import numpy as np

import nurbslimits as nl


def main():
    kv = nl.KnotVector(knots=[0, 0, 0, 0, 1, 1, 1, 1], degree=3)
    points = np.array([[0.0, 0.0], [1.0, 2.0], [3.0, 2.0], [4.0, 0.0]])
    cfg = nl.NurbsCurveConfig(
        knot_vector=kv, control_points=points, base_weights=[1, 1, 1, 1], span_index=3
    )

    print("cubic basis on the clamped span [0, 1]:")
    for u in (0.0, 0.25, 0.5, 0.75, 1.0):
        values = nl.basis_functions(kv, 3, u).values
        print(f"  u={u:4.2f}  N = {np.array2string(values, precision=5)}  sum = {values.sum():.15f}")

    print()
    print("curve point at u=0.5 as the third weight grows:")
    for w2 in (1.0, 10.0, 100.0, 1e4, 1e8):
        point = nl.eval_nurbs(cfg, [1.0, 1.0, w2, 1.0], 0.5)
        print(f"  w2 = {w2:>10.0f}  ->  C(0.5) = ({point[0]:.6f}, {point[1]:.6f})")
    print(f"  control point p2      =  ({points[2][0]:.6f}, {points[2][1]:.6f})")

    print()
    print("rational basis shares at u=0.5 for w = (1, 1, 100, 1):")
    shares = nl.rational_basis(cfg, [1.0, 1.0, 100.0, 1.0], 0.5)
    for j, share in enumerate(shares):
        print(f"  R_{j} = {share:.6f}")
    print(f"  total = {shares.sum():.15f}")


if __name__ == "__main__":
    main()
