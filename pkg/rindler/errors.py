"""Exception hierarchy shared by every rindler module."""


class RindlerError(Exception):
    """Base class for all errors raised by the rindler package."""

    pass


class ParameterError(RindlerError, ValueError):
    """Raised when physical parameters or call arguments are invalid."""

    pass


class HorizonError(ParameterError):
    """Raised when a coordinate lies at or beyond the Rindler horizon (xi <= 0)."""

    pass


class ConvergenceError(RindlerError):
    """Raised when an iterative solver exhausts its budget or a linear-algebra kernel fails."""

    pass


class QuadratureError(RindlerError):
    """Raised when an integrand evaluates to a non-finite value at a quadrature node."""

    pass


class ConfigError(RindlerError):
    """Raised when a run configuration cannot be loaded or validated."""

    pass
