"""Exception types raised across the package.

All of them derive from ValueError so that callers which only care about
"bad input" can keep catching ValueError.
"""

from typing import Any


class ConfigurationError(ValueError):
    """Unsupported algebra, rank or run option."""


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class WeightsNotImplementedError(DomainError):
    """Weight list requested for a fundamental representation we do not model."""


class IdentityNotClaimedError(DomainError):
    """A manifest identity was requested outside the range where it is stated."""


class SeriesOrderError(DomainError):
    """Two truncated series with different orders were compared."""


class NotAVirtualCharacterError(ValueError):
    """A weight map could not be written as a combination of irreducible characters."""


class PairQueueOverflowError(ValueError):
    """Buchberger's pair queue grew past the configured bound."""


class ModelError(ValueError):
    """Invalid quadratic monomial model."""


class FixtureError(ValueError):
    """Fixture file is missing, malformed or unusable for the requested command."""


class QuadratizationError(ValueError):
    """Auxiliary-variable substitution did not reach a quadratic ideal.

    Attributes:
        substitutions: Auxiliary definitions introduced so far
        remaining: Generators that are still not quadratic
    """

    def __init__(
        self,
        message: str,
        substitutions: list[tuple[str, dict[str, int]]] | None = None,
        remaining: list[dict[str, int]] | None = None,
    ) -> None:
        super().__init__(message)
        self.substitutions = substitutions or []
        self.remaining = remaining or []

    def partial_state(self) -> dict[str, Any]:
        """Return the partial state as a plain dictionary."""
        return {
            "substitutions": [{"name": n, "monomial": m} for n, m in self.substitutions],
            "remaining": self.remaining,
        }
