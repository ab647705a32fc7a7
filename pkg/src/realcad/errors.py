"""Exception types shared across the solver."""

from __future__ import annotations


class RealCADError(Exception):
    """Base class for all solver errors."""


class ParseError(RealCADError):
    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = expected
        detail = f"{message} at line {line}, column {column}"
        if expected:
            detail += f" (expected {', '.join(expected)})"
        super().__init__(detail)


class DegenerateDegreeError(RealCADError):
    """Resultant/discriminant requested for a polynomial of too-low degree."""


class PrimitivityError(RealCADError):
    """A designated equation failed the primitivity gate."""


class BudgetExceededError(RealCADError):
    """Cell or wall-clock cap exceeded; never a wrong answer."""

    def __init__(self, kind: str, limit):
        self.kind = kind
        self.limit = limit
        super().__init__(f"{kind} budget exceeded (limit {limit})")


class UnknownConstraintError(RealCADError):
    """remove_constraint called with an identifier that is not live."""


class SolverUsageError(RealCADError):
    """A call that violates a precondition (mixed quantifiers, wrong mode, ...)."""


class ComputationError(RealCADError):
    """An internal exact computation could not be completed."""
