"""Exception taxonomy shared by all modules.

Exit-code mapping used by the CLI: usage/config errors -> 2,
numeric/domain/degeneracy errors -> 3, contour-tracking errors -> 4.
"""


class JacobiLTError(Exception):
    """Base class for all package errors."""

    exit_code = 3


class UsageError(JacobiLTError):
    """Invalid arguments or spec/perturbation mismatch."""

    exit_code = 2


class ConfigError(UsageError):
    """Experiment configuration failed validation."""


class DomainError(JacobiLTError):
    """Evaluation point outside the operation's domain (e.g. z in E)."""


class DegeneracyError(JacobiLTError):
    """Closed gap / |discriminant| = 2 degeneracy."""


class NumericError(JacobiLTError):
    """Iteration failed to converge.

    Carries the last two estimates when they exist, so callers can inspect
    how far the iteration got.
    """

    def __init__(self, message, last_estimates=None):
        super().__init__(message)
        self.last_estimates = last_estimates


class ContourError(JacobiLTError):
    """Phase tracking along a contour failed; carries the offending box."""

    exit_code = 4

    def __init__(self, message, box=None):
        super().__init__(message)
        self.box = box
