"""Exception hierarchy. Every error carries the CLI exit code it maps to."""


class KleinMetricError(Exception):
    exit_code: int = 1


class ConfigurationError(KleinMetricError, ValueError):
    exit_code = 2


class DimensionMismatchError(KleinMetricError, ValueError):
    exit_code = 2


class BasisMismatchError(KleinMetricError, ValueError):
    exit_code = 2


class NonPositiveSpectrumError(KleinMetricError, ValueError):
    """Kinetic eigenvalue at or below the positivity tolerance; energies would not be real."""

    exit_code = 3


class NotPositiveError(KleinMetricError, ValueError):
    exit_code = 4


class IllConditionedError(KleinMetricError, ArithmeticError):
    exit_code = 4
