"""Exception types raised by the package."""


class ValidationError(ValueError):
    """Input values violate a documented precondition."""


class DimensionError(ValueError):
    """Matrix shapes are incompatible with the requested operation."""


class ConvergenceError(RuntimeError):
    """The Jacobi eigensolver hit its sweep cap."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
