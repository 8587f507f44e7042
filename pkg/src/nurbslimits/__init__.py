"""NURBS curve evaluation and limit analysis for weights growing to infinity.

The public API mirrors the module layout: spline evaluation primitives
(`spline_core`), power-law weight trajectories (`weight_paths`), limit
curves and uniformity conditions (`limit_curves`), and empirical
convergence measurements (`convergence`).
"""

from .convergence import (
    ConvergenceReport,
    PathDependenceResult,
    convergence_sweep,
    default_schedule,
    fit_loglog_slope,
    l1_error,
    path_dependence_demo,
    pointwise_error,
    sup_error,
)
from .config import ExperimentConfig, load_config, parse_config
from .errors import (
    DomainError,
    PreconditionError,
    UniformConditionError,
    ValidationError,
)
from .limit_curves import (
    EffectiveGroup,
    LimitCurve,
    UniformConditionReport,
    check_uniform_conditions,
    limit_curve,
    omega_threshold,
    pointwise_limit,
    uniform_limit_curve,
)
from .spline_core import (
    BasisValues,
    KnotVector,
    NurbsCurveConfig,
    basis_functions,
    eval_nurbs,
    find_span,
    rational_basis,
)
from .weight_paths import (
    DominanceGroup,
    DominanceGroups,
    WeightPath,
    dominance_groups,
    weights_at,
)

__version__ = "0.1.0"

__all__ = [
    "BasisValues",
    "ConvergenceReport",
    "DominanceGroup",
    "DominanceGroups",
    "DomainError",
    "EffectiveGroup",
    "ExperimentConfig",
    "KnotVector",
    "LimitCurve",
    "NurbsCurveConfig",
    "PathDependenceResult",
    "PreconditionError",
    "UniformConditionError",
    "UniformConditionReport",
    "ValidationError",
    "WeightPath",
    "basis_functions",
    "check_uniform_conditions",
    "convergence_sweep",
    "default_schedule",
    "dominance_groups",
    "eval_nurbs",
    "find_span",
    "fit_loglog_slope",
    "l1_error",
    "limit_curve",
    "load_config",
    "omega_threshold",
    "parse_config",
    "path_dependence_demo",
    "pointwise_error",
    "pointwise_limit",
    "rational_basis",
    "sup_error",
    "uniform_limit_curve",
    "weights_at",
]
