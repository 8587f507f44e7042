"""Exception types shared across the library.

All three derive from ValueError so callers that do not care about the
distinction can catch a single base class.  The CLI maps them to exit
code 2; anything else is treated as an internal error (exit code 1).
"""


class ValidationError(ValueError):
    """Input data violates a structural invariant (bad knots, weights, config)."""


class DomainError(ValueError):
    """A parameter value or span index lies outside its valid domain."""


class PreconditionError(ValueError):
    """An operation's mathematical preconditions are not satisfied."""


class UniformConditionError(PreconditionError):
    """Uniform-limit preconditions failed; carries the condition report."""

    def __init__(self, report):
        super().__init__(
            "uniform limit conditions violated: " + "; ".join(report.reasons)
        )
        self.report = report
