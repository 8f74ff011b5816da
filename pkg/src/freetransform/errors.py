"""Exception types shared across the package.

Every numerical routine raises one of these instead of returning NaN or
Inf, so a non-finite value can never escape an operation silently.
"""


class FreeTransformError(Exception):
    """Base class for all package errors."""


class InvalidInput(FreeTransformError, ValueError):
    """Malformed argument: bad measure data, bad grid, bad config."""


class DomainError(FreeTransformError, ValueError):
    """Argument lies outside the mathematical domain of the function."""


class ConvergenceError(FreeTransformError, ArithmeticError):
    """An iteration or series failed to converge within its budget."""


class MaxSubdivisionError(ConvergenceError):
    """Adaptive quadrature exhausted its panel budget before reaching tol."""


class NonFiniteError(FreeTransformError, ArithmeticError):
    """An integrand or intermediate value came back NaN or infinite."""


class StepError(FreeTransformError, ValueError):
    """Differentiation step too large for the evaluation point."""
