"""Exception hierarchy shared by all ghquad modules.

The CLI maps these onto process exit codes (see :mod:`ghquad.cli`):
domain/parameter/range/divergence problems exit with 3, convergence
failures with 4.
"""


class GhquadError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GhquadError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParameterError(DomainError):
    """A distribution parameter record violates its invariants."""


class SizeError(DomainError):
    """A quadrature size is outside the supported range."""


class RangeError(GhquadError, ArithmeticError):
    """A special-function value overflowed or underflowed the float range."""


class DivergenceError(DomainError):
    """A moment/MGF/price was requested where the defining integral diverges."""


class ConvergenceError(GhquadError, RuntimeError):
    """An iterative procedure failed to converge.

    The best available estimate, if any, is attached as ``estimate``.
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate
