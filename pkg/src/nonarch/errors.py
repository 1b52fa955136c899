"""Exception types shared by every module.

Each error carries a short ``name`` used in CLI and JSON output, and an
optional source location filled in by the expression evaluator.
"""

from __future__ import annotations


class NonArchError(Exception):
    name = "NonArchError"

    def __init__(self, message: str = "", line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def located(self, line: int, column: int) -> "NonArchError":
        if self.line is None:
            self.line, self.column = line, column
        return self

    def __str__(self) -> str:
        where = ""
        if self.line is not None:
            where = f" at line {self.line}, column {self.column}"
        return f"{self.name}{where}: {self.message}" if self.message else f"{self.name}{where}"


class DivisionByZero(NonArchError, ZeroDivisionError):
    name = "DivisionByZero"


class ZeroGerm(NonArchError, ValueError):
    name = "ZeroGerm"


class NotFinite(NonArchError, ValueError):
    name = "NotFinite"


class NonpositiveStep(NonArchError, ValueError):
    name = "NonpositiveStep"


class OrderViolation(NonArchError, ValueError):
    name = "OrderViolation"


class NotMember(NonArchError, ValueError):
    name = "NotMember"


class DegreeLimit(NonArchError, OverflowError):
    name = "DegreeLimit"


class UniverseTooLarge(NonArchError, ValueError):
    name = "UniverseTooLarge"


class TypeMismatch(NonArchError, TypeError):
    name = "TypeMismatch"


class UnknownFunction(NonArchError, NameError):
    name = "UnknownFunction"


class ParseError(NonArchError):
    """Malformed expression text; ``expected`` lists the acceptable tokens."""

    name = "SyntaxError"

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        super().__init__(message, line, column)
        self.expected = tuple(expected)


class IntegerExponentRequired(ParseError):
    name = "IntegerExponentRequired"
