"""Exception taxonomy shared by every layer.

Each exception class maps to exactly one machine code at the API boundary
(see ``foresight.api``); the CLI turns the same classes into exit codes.
"""

from __future__ import annotations


class ForesightError(Exception):
    """Base class for all domain and infrastructure errors."""


class DomainValidationError(ForesightError):
    """Input data violates a domain invariant (bad score, bad amount, ...)."""

    def __init__(self, message: str, path: str | None = None):
        super().__init__(message)
        self.path = path


class ConfigurationError(ForesightError):
    """A threshold, target, or engine setting is outside its legal range."""


class BudgetExceededError(ConfigurationError):
    """A request would exceed a configured resource cap (trace memory, sweep cells)."""


class IllegalTransitionError(ForesightError):
    """The funnel state machine has no transition for (stage, event)."""


class EventConsistencyError(ForesightError):
    """A funnel event's payload does not justify the transition it requests."""


class NotFoundError(ForesightError):
    """A referenced idea (or other entity) does not exist."""


class StoreError(ForesightError):
    """Base class for persistence failures."""


class StoreNotFoundError(StoreError):
    """The portfolio file does not exist."""


class StoreParseError(StoreError):
    """The portfolio file is not valid JSON."""


class SchemaVersionError(StoreError):
    """The portfolio file declares a schema version this build does not know."""


class StoreIntegrityError(StoreError):
    """The portfolio file parsed but violates a portfolio-level invariant."""

    def __init__(self, violations: list):
        self.violations = list(violations)
        detail = "; ".join(f"{v.path}: {v.message}" for v in self.violations)
        super().__init__(f"portfolio integrity check failed: {detail}")
