"""Exception hierarchy shared by the services; the CLI maps exit codes."""

from __future__ import annotations

from utils.rules import RuleViolation

EXIT_OK = 0
EXIT_VERDICT_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_NUMERIC = 4


class AlgserError(Exception):
    """Base class for every error raised on purpose by this package."""

    exit_code = EXIT_USAGE


class InvalidInputError(AlgserError, ValueError):
    """Raised when user data (letters, params, JSON, relations) is invalid."""


class UndefinedLeadingMonomialError(InvalidInputError):
    """Raised when the leading monomial of the zero polynomial is requested."""


class GrammarLoadError(InvalidInputError):
    """Raised when a grammar description fails validation."""

    def __init__(self, message: str, violations: list[RuleViolation] | None = None) -> None:
        super().__init__(message)
        self.violations = list(violations or [])

    @property
    def symbols(self) -> list[str]:
        return [str(v.actual) for v in self.violations]


class GuardExceededError(AlgserError):
    """Raised when a bound exceeds its configured guard."""

    exit_code = EXIT_GUARD


class NumericError(AlgserError, ArithmeticError):
    """Raised when an exact computation cannot produce a result."""

    exit_code = EXIT_NUMERIC


class NotInvertibleError(NumericError):
    """Raised when inverting a series with zero constant term."""


class FixedPointError(NumericError):
    """Raised when a grammar system does not stabilize within its round budget."""

    def __init__(self, message: str, trace: list[str] | None = None) -> None:
        super().__init__(message)
        self.trace = list(trace or [])


class IntegralityError(NumericError):
    """Raised when a Hilbert or Tor series has a non-integral or negative coefficient."""


class InternalError(AlgserError):
    """Raised when an exact identity that must hold does not (a bug, never user data)."""

    exit_code = EXIT_NUMERIC


def ensure_within_guard(value: int, limit: int, what: str, *, force: bool = False) -> None:
    """Raise GuardExceededError when ``value`` exceeds ``limit`` and the guard is not forced."""
    if value > limit and not force:
        raise GuardExceededError(f"{what} {value} exceeds the guard {limit} (use --force to override)")
