"""Errors raised by fg_workbench.

Library code raises; only the command line turns these into exit codes.
"""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class GrammarError(WorkbenchError):
    """Text did not conform to one of the grammars."""

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DomainError(WorkbenchError):
    """Well-formed input that is semantically invalid."""


class AlphabetError(DomainError):
    pass


class UndefinedRootError(DomainError):
    pass


class TowerError(DomainError):
    pass


class EquationError(DomainError):
    pass


class ScopeError(DomainError):
    """A search or enumeration would leave its supported scope."""


class PreconditionError(DomainError):
    pass


class LemmaViolation(WorkbenchError):
    """A checker found a counterexample to a theorem: this is a bug."""
