"""Limit curves for linearly and quadratically coupled weight growth.

Both experiments drive the two middle weights of a cubic one-span curve
to infinity, but along different paths.  With linear coupling
(w1, w2) ~ (t, k*t) the interior limit is a blend of p1 and p2; with
quadratic coupling (t, t^2) the faster weight wins everywhere inside.
Either way the endpoints stay pinned at p0 and p3 because the dominant
basis functions vanish there -- the limit has jumps.
"""

import numpy as np

import nurbslimits as nl


def show_case(cfg, path, label):
    lc = nl.limit_curve(cfg, path)
    print(label)
    print(f"  interior group: {lc.interior_group.indices.tolist()}")
    print(f"  endpoint groups: start {lc.start_group.indices.tolist()}, "
          f"end {lc.end_group.indices.tolist()}")
    for u in (0.0, 0.25, 0.5, 0.75, 1.0):
        value = lc(u)
        group = ",".join(str(j) for j in lc.group_at(u).indices)
        print(f"  u={u:4.2f}  limit = ({value[0]: .6f}, {value[1]: .6f})   from indices {{{group}}}")
    print()


def main():
    kv = nl.KnotVector(knots=[0, 0, 0, 0, 1, 1, 1, 1], degree=3)
    points = np.array([[j, j * j] for j in range(4)], dtype=float)
    cfg = nl.NurbsCurveConfig(
        knot_vector=kv, control_points=points, base_weights=[1, 1, 1, 1], span_index=3
    )
    print("control points:", points.tolist())
    print()

    linear = nl.WeightPath(coefficients=[1, 1, 2, 1], exponents=[0, 1, 1, 0])
    show_case(cfg, linear, "linear coupling  w = (1, t, 2t, 1):")

    quadratic = nl.WeightPath(coefficients=[1, 1, 1, 1], exponents=[0, 1, 2, 0])
    show_case(cfg, quadratic, "quadratic coupling  w = (1, t, t^2, 1):")

    print("finite-t curve vs the quadratic-coupling limit at u=0.5:")
    for t in (1e2, 1e4, 1e6, 1e8):
        point = nl.eval_nurbs(cfg, nl.weights_at(quadratic, t, normalized=True), 0.5)
        err = np.linalg.norm(point - points[2])
        print(f"  t = {t:>10.0e}   C(0.5) = ({point[0]:.8f}, {point[1]:.8f})   |err| = {err:.2e}")


if __name__ == "__main__":
    main()
