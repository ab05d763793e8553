"""Exception types shared across the kernel."""

from __future__ import annotations


class TrikernelError(Exception):
    """Base class for every error this package raises deliberately."""


class DomainMismatchError(TrikernelError):
    """Operands belong to different fields, rings, or scalar models."""


class SharpOnEvenPartError(TrikernelError):
    """The local product was applied to an operand with a nonzero even part."""


class UnclosedTriidealError(TrikernelError):
    """The operation needs a triideal whose graded closure has been taken."""


class EnumerationUnsupportedError(TrikernelError):
    """Point enumeration was requested over an infinite coefficient field."""


class BudgetExceededError(TrikernelError):
    """Enumeration would visit more points than the configured budget."""


class FrontendError(TrikernelError):
    """Base for text-layer errors; carries a 1-based source position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class TriSyntaxError(FrontendError):
    """Lexical or grammatical error in expression or script text."""


class ElaborationError(FrontendError):
    """Name, arity, or literal error while turning a syntax tree into a value."""


class GradingError(FrontendError):
    """Expression combines even and odd parts in a way the grading forbids."""
