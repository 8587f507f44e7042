"""JSON experiment configs: one curve, one or two weight paths, analysis knobs.

Schema (see README for the full reference):

    {
      "curve":   {"degree", "knots", "control_points", "base_weights", "span_index"},
      "path":    [{"index", "k", "e"}, ...],          # every control index once
      "path_b":  [...],                               # optional second path
      "analysis": {"grid_size", "subdivisions", "reference",
                   "t_schedule": [..] | {"t_min", "t_max", "points_per_decade"}},
      "output":  {"format": "csv", "destination": "..."}
    }

All curve and path invariants are validated here, before any computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .convergence import DEFAULT_GRID_SIZE, DEFAULT_SUBDIVISIONS, default_schedule
from .errors import ValidationError
from .spline_core import KnotVector, NurbsCurveConfig
from .weight_paths import WeightPath


@dataclass
class ExperimentConfig:
    curve: NurbsCurveConfig
    path: WeightPath
    path_b: WeightPath | None
    grid_size: int
    subdivisions: int
    schedule: np.ndarray
    reference: str
    destination: str | None


def load_config(path) -> ExperimentConfig:
    """Read and validate a JSON experiment file."""
    text = Path(path).read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config is not valid JSON: {exc}") from exc
    return parse_config(raw)


def parse_config(raw: dict) -> ExperimentConfig:
    """Build a validated ExperimentConfig from already-parsed JSON data."""
    if not isinstance(raw, dict):
        raise ValidationError("config root must be a JSON object")
    curve = _parse_curve(_require(raw, "curve", dict))
    path = _parse_path(_require(raw, "path", list), curve)
    path_b = None
    if raw.get("path_b") is not None:
        path_b = _parse_path(_expect(raw, "path_b", list), curve)
    analysis = raw.get("analysis") or {}
    if not isinstance(analysis, dict):
        raise ValidationError("'analysis' must be an object")
    grid_size = int(analysis.get("grid_size", DEFAULT_GRID_SIZE))
    if grid_size < 2:
        raise ValidationError("analysis.grid_size must be at least 2")
    subdivisions = int(analysis.get("subdivisions", DEFAULT_SUBDIVISIONS))
    if subdivisions < 1:
        raise ValidationError("analysis.subdivisions must be at least 1")
    reference = analysis.get("reference", "pointwise")
    if reference not in ("pointwise", "interior"):
        raise ValidationError(
            f"analysis.reference must be 'pointwise' or 'interior', got {reference!r}"
        )
    schedule = _parse_schedule(analysis.get("t_schedule"))
    output = raw.get("output") or {}
    if not isinstance(output, dict):
        raise ValidationError("'output' must be an object")
    fmt = output.get("format", "csv")
    if fmt != "csv":
        raise ValidationError(f"output.format must be 'csv', got {fmt!r}")
    destination = output.get("destination")
    return ExperimentConfig(
        curve=curve,
        path=path,
        path_b=path_b,
        grid_size=grid_size,
        subdivisions=subdivisions,
        schedule=schedule,
        reference=reference,
        destination=destination,
    )


def _parse_curve(raw: dict) -> NurbsCurveConfig:
    kv = KnotVector(
        knots=_require(raw, "knots", list),
        degree=_require(raw, "degree", int),
    )
    return NurbsCurveConfig(
        knot_vector=kv,
        control_points=_require(raw, "control_points", list),
        base_weights=_require(raw, "base_weights", list),
        span_index=_require(raw, "span_index", int),
    )


def _parse_path(entries: list, curve: NurbsCurveConfig) -> WeightPath:
    n = curve.knot_vector.n_basis
    k = np.full(n, np.nan)
    e = np.full(n, np.nan)
    for entry in entries:
        if not isinstance(entry, dict) or not {"index", "k", "e"} <= set(entry):
            raise ValidationError("each path entry must be an object with index, k, e")
        j = entry["index"]
        if not isinstance(j, int) or not 0 <= j < n:
            raise ValidationError(f"path entry index {j!r} outside 0..{n - 1}")
        if not np.isnan(k[j]):
            raise ValidationError(f"path entry index {j} given twice")
        k[j] = float(entry["k"])
        e[j] = float(entry["e"])
    missing = np.nonzero(np.isnan(k))[0]
    if missing.size:
        raise ValidationError(f"path is missing entries for indices {missing.tolist()}")
    return WeightPath(coefficients=k, exponents=e)


def _parse_schedule(raw) -> np.ndarray:
    if raw is None:
        return default_schedule()
    if isinstance(raw, list):
        if not raw:
            raise ValidationError("t_schedule must not be empty")
        sched = np.asarray(raw, dtype=np.float64)
        if np.any(sched <= 0) or np.any(np.diff(sched) <= 0):
            raise ValidationError("t_schedule must be positive and strictly increasing")
        return sched
    if isinstance(raw, dict):
        return default_schedule(
            t_min=float(raw.get("t_min", 10.0)),
            t_max=float(raw.get("t_max", 1e8)),
            points_per_decade=int(raw.get("points_per_decade", 1)),
        )
    raise ValidationError("t_schedule must be a list or a {t_min, t_max, points_per_decade} object")


def _require(raw: dict, key: str, kind: type):
    if key not in raw:
        raise ValidationError(f"config is missing required field {key!r}")
    return _expect(raw, key, kind)


def _expect(raw: dict, key: str, kind: type):
    value = raw[key]
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(f"config field {key!r} must be an integer")
    elif not isinstance(value, kind):
        raise ValidationError(f"config field {key!r} must be a {kind.__name__}")
    return value
