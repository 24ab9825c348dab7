"""Exception types shared across the workbench."""

from __future__ import annotations


class FincatError(Exception):
    """Base class for all workbench errors."""


class StructuralError(FincatError):
    """A presentation is malformed or references ids that do not resolve."""


class ComposabilityError(FincatError):
    """Composition was requested for a non-composable pair of arrows."""


class ContractError(FincatError):
    """An operation was called with arguments violating its contract."""


class CapacityError(FincatError):
    """A construction or enumeration exceeds the configured budget."""


class DslError(FincatError):
    """Base class for specification-language errors; always carries a
    position and a stable machine code."""

    def __init__(self, code: str, message: str, line: int, col: int,
                 expected: str | None = None):
        self.code = code
        self.line = line
        self.col = col
        self.expected = expected
        hint = f" (expected {expected})" if expected else ""
        super().__init__(f"{code} at line {line}, col {col}: {message}{hint}")


class LexError(DslError):
    """Input contains a character no token can start with."""


class DslSyntaxError(DslError):
    """Token stream does not match the grammar."""


class ResolutionError(DslError):
    """A name does not resolve, clashes, or a block is incomplete."""
