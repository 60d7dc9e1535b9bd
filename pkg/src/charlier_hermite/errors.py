"""Exception types shared across the package.

The CLI maps DomainError (and subclasses) to exit code 1 and
ConvergenceError to exit code 2.
"""


class DomainError(ValueError):
    """An input violates a documented precondition."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole of the gamma function."""


class RationalModeError(DomainError):
    """Exact-rational evaluation requested for inputs it cannot represent."""


class DegenerateArgumentError(DomainError):
    """An argument is too close to zero for the requested formula.

    Raised instead of dividing; the caller must fall back to direct
    evaluation.
    """


class ConvergenceError(RuntimeError):
    """An iterative scheme hit its iteration cap before converging."""
