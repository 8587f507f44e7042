"""Command-line front end: evaluate curves, limits, sweeps, and path demos.

Commands read a JSON experiment config (see config module / README) and
emit CSV: one header row, comma-separated data rows, and '#'-prefixed
comment rows carrying metadata.  Numbers are printed with 17 significant
digits so they round-trip to the exact double.

Exit codes: 0 success, 2 validation or domain error, 1 internal error.
"""

from __future__ import annotations

import argparse
import sys

from .config import ExperimentConfig, load_config
from .convergence import convergence_sweep, fit_loglog_slope, path_dependence_demo
from .errors import DomainError, PreconditionError, ValidationError
from .limit_curves import check_uniform_conditions, limit_curve
from .spline_core import eval_nurbs
from .weight_paths import weights_at


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _parse_u_list(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValidationError(f"cannot parse u list {text!r}") from exc
    if not values:
        raise ValidationError("no u values given")
    return values


def _coord_header(prefix: str, dim: int) -> list[str]:
    return [f"{prefix}{axis + 1}" for axis in range(dim)]


def cmd_eval(config: ExperimentConfig, t: float, u_list: list[float]):
    weights = weights_at(config.path, t, normalized=True)
    comments = [f"t: {_fmt(t)}", f"path: {config.path.describe()}"]
    header = ["u"] + _coord_header("x", config.curve.dimension)
    rows = []
    for u in u_list:
        point = eval_nurbs(config.curve, weights, u)
        rows.append([_fmt(u)] + [_fmt(c) for c in point])
    return comments, header, rows


def cmd_limit(config: ExperimentConfig, u_list: list[float]):
    report = check_uniform_conditions(config.curve, config.path)
    comments = [f"uniform: {'true' if report.holds else 'false'}"]
    if not report.holds:
        comments.append("uniform violations: " + "; ".join(report.reasons))
    lc = limit_curve(config.curve, config.path)
    header = ["u"] + _coord_header("x", config.curve.dimension) + ["group"]
    rows = []
    for u in u_list:
        point = lc(u)
        group = ";".join(str(int(j)) for j in lc.group_at(u).indices)
        rows.append([_fmt(u)] + [_fmt(c) for c in point] + [group])
    return comments, header, rows


def cmd_sweep(config: ExperimentConfig):
    report = convergence_sweep(
        config.curve,
        config.path,
        config.schedule,
        grid_size=config.grid_size,
        subdivisions=config.subdivisions,
        reference=config.reference,
    )
    comments = [f"{key}: {value}" for key, value in report.metadata.items()]
    header = ["t", "sup_error", "l1_error"]
    rows = [
        [_fmt(t), _fmt(sup), _fmt(l1)]
        for t, sup, l1 in zip(report.schedule, report.sup_errors, report.l1_errors)
    ]
    slope = fit_loglog_slope(report.schedule, report.sup_errors)
    trailing = [f"loglog_slope: {_fmt(slope)}"]
    return comments, header, rows, trailing


def cmd_pathdemo(config: ExperimentConfig, u: float):
    if config.path_b is None:
        raise ValidationError("pathdemo needs a second path: add 'path_b' to the config")
    result = path_dependence_demo(config.curve, config.path, config.path_b, u)
    dim = config.curve.dimension
    comments = [
        f"path_a: {config.path.describe()}",
        f"path_b: {config.path_b.describe()}",
    ]
    header = ["u"] + _coord_header("a_x", dim) + _coord_header("b_x", dim) + ["separation"]
    row = (
        [_fmt(result.u)]
        + [_fmt(c) for c in result.limit_a]
        + [_fmt(c) for c in result.limit_b]
        + [_fmt(result.separation)]
    )
    return comments, header, [row]


def _render_csv(comments, header, rows, trailing=()) -> str:
    lines = [f"# {comment}" for comment in comments]
    lines.append(",".join(header))
    lines.extend(",".join(row) for row in rows)
    lines.extend(f"# {comment}" for comment in trailing)
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nurbslimits",
        description="Evaluate NURBS curves and their limits under weights growing to infinity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", required=True, help="JSON experiment config file")
        p.add_argument("--out", default=None, help="output CSV file (default: stdout)")

    p_eval = sub.add_parser("eval", help="evaluate the curve at finite t")
    add_common(p_eval)
    p_eval.add_argument("--t", required=True, type=float, help="weight path parameter t > 0")
    p_eval.add_argument("--u", required=True, help="comma-separated parameter values")

    p_limit = sub.add_parser("limit", help="evaluate the limit curve")
    add_common(p_limit)
    p_limit.add_argument("--u", required=True, help="comma-separated parameter values")

    p_sweep = sub.add_parser("sweep", help="sup/L1 error sweep over the t schedule")
    add_common(p_sweep)

    p_demo = sub.add_parser("pathdemo", help="compare limits along the two config paths")
    add_common(p_demo)
    p_demo.add_argument("--u", required=True, help="a single parameter value strictly inside the span")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        if args.command == "eval":
            comments, header, rows = cmd_eval(config, args.t, _parse_u_list(args.u))
            text = _render_csv(comments, header, rows)
        elif args.command == "limit":
            comments, header, rows = cmd_limit(config, _parse_u_list(args.u))
            text = _render_csv(comments, header, rows)
        elif args.command == "sweep":
            comments, header, rows, trailing = cmd_sweep(config)
            text = _render_csv(comments, header, rows, trailing)
        else:
            u_values = _parse_u_list(args.u)
            if len(u_values) != 1:
                raise ValidationError("pathdemo takes exactly one u value")
            comments, header, rows = cmd_pathdemo(config, u_values[0])
            text = _render_csv(comments, header, rows)
    except (ValidationError, DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1

    destination = args.out if args.out is not None else config.destination
    if destination:
        with open(destination, "w", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
