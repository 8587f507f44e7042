"""Weight trajectories of the form w_j(t) = k_j * t^{e_j}.

A path sends several weights to infinity jointly while keeping their
relative growth rates explicit.  Indices sharing the same exponent form
a dominance group; as t grows, every group is asymptotically negligible
against any group with a larger exponent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError

# Exponents are user-specified constants, so near-exact comparison is safe.
EXPONENT_TOL = 1e-12


@dataclass
class WeightPath:
    """Per-index power laws: coefficient k_j > 0 and exponent e_j >= 0.

    Indices with e_j = 0 keep a fixed finite weight; at least one index
    must actually grow (some e_j > 0), otherwise there is no limit
    process to study.
    """

    coefficients: np.ndarray
    exponents: np.ndarray

    def __post_init__(self):
        k = np.asarray(self.coefficients, dtype=np.float64)
        e = np.asarray(self.exponents, dtype=np.float64)
        if k.ndim != 1 or e.ndim != 1 or k.size != e.size:
            raise ValidationError("coefficients and exponents must be 1-d and equal length")
        if k.size == 0:
            raise ValidationError("weight path must cover at least one index")
        if np.any(k <= 0) or not np.all(np.isfinite(k)):
            raise ValidationError("all path coefficients must be positive and finite")
        if np.any(e < 0) or not np.all(np.isfinite(e)):
            raise ValidationError("all path exponents must be non-negative and finite")
        if not np.any(e > 0):
            raise ValidationError("at least one exponent must be positive")
        k.flags.writeable = False
        e.flags.writeable = False
        self.coefficients = k
        self.exponents = e

    def __len__(self) -> int:
        return self.coefficients.size

    def describe(self) -> str:
        """Compact one-line description used in report metadata."""
        k = np.array2string(self.coefficients, separator=" ", max_line_width=10**9)
        e = np.array2string(self.exponents, separator=" ", max_line_width=10**9)
        return f"k={k} e={e}"


@dataclass
class DominanceGroup:
    """Indices sharing one growth exponent, with their coefficients."""

    exponent: float
    indices: np.ndarray
    coefficients: np.ndarray


@dataclass
class DominanceGroups:
    """All groups of a path, ordered by strictly decreasing exponent."""

    groups: tuple[DominanceGroup, ...]

    def __iter__(self):
        return iter(self.groups)

    def __len__(self) -> int:
        return len(self.groups)

    @property
    def dominant(self) -> DominanceGroup:
        """The fastest-growing group."""
        return self.groups[0]


def weights_at(path: WeightPath, t: float, normalized: bool = False) -> np.ndarray:
    """The weight vector (k_j * t^{e_j}) at parameter t > 0.

    With ``normalized=True`` the vector is divided by t^{max e}, which
    leaves every rational-curve evaluation unchanged (the curve is scale
    invariant in the weights) while avoiding overflow for large t.
    """
    if not np.isfinite(t) or t <= 0:
        raise DomainError(f"path parameter t must be positive, got {t}")
    e = path.exponents
    if normalized:
        e = e - e.max()
    return path.coefficients * t**e


def dominance_groups(path: WeightPath) -> DominanceGroups:
    """Group indices by equal exponent and sort groups descending.

    Exponents are considered equal when they differ by at most
    ``EXPONENT_TOL``; groups partition the full index set.
    """
    order = np.argsort(-path.exponents, kind="stable")
    groups: list[DominanceGroup] = []
    start = 0
    sorted_e = path.exponents[order]
    for pos in range(1, order.size + 1):
        if pos == order.size or sorted_e[pos - 1] - sorted_e[pos] > EXPONENT_TOL:
            members = np.sort(order[start:pos])
            groups.append(
                DominanceGroup(
                    exponent=float(sorted_e[start]),
                    indices=members,
                    coefficients=path.coefficients[members],
                )
            )
            start = pos
    return DominanceGroups(groups=tuple(groups))
