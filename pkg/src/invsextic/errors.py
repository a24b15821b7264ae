"""Exception types shared across the solver modules."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InvariantViolationError(ValueError):
    """An internal consistency condition failed (e.g. a radicand went negative)."""


class UnsupportedRegimeError(ValueError):
    """The requested parameters are valid physics but outside what a method can solve."""


class DegenerateParameterError(ValueError):
    """A recursion coefficient denominator vanished for the given parameters."""


class NotPositiveDefiniteError(ValueError):
    """A matrix required to be positive definite is not (Cholesky failed)."""


class NumericalFailureError(RuntimeError):
    """An iterative kernel failed to converge."""


class NoPlateauError(RuntimeError):
    """No stability plateau was found in the scanned parameter range."""
