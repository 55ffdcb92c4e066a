"""Exception and warning types shared across the package."""


class AlphaHarmError(Exception):
    """Base class for all library errors."""


class DomainError(AlphaHarmError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(AlphaHarmError, RuntimeError):
    """A series or iteration failed to meet its stopping criterion."""


class RangeOverflowError(AlphaHarmError, OverflowError):
    """A finite mathematical value exceeds the double-precision range."""


class ConfigError(AlphaHarmError, ValueError):
    """A job configuration document is malformed or inconsistent."""


class QuadratureResolutionWarning(UserWarning):
    """Node count below the documented recommendation for the request."""


class HypothesisViolationWarning(UserWarning):
    """Inputs violate a theorem hypothesis; results are still computed."""
