"""Exception types shared across the package.

Three failure families are distinguished so callers (and the CLI) can map
them to exit codes: bad mathematical inputs, quadrature that failed to
converge within its node budget, and root refinement that could not be
certified.
"""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class QuadratureError(RuntimeError):
    """A quadrature rule hit its node or panel budget before converging."""


class RefinementError(RuntimeError):
    """Root refinement failed to produce a certified bracket."""
