"""Exception types raised across the package."""

from __future__ import annotations


class FFElimError(Exception):
    """Base class for every error raised by ffelim."""


class MixedRings(FFElimError, TypeError):
    """Operands belong to different ring instances."""


class DivisionByZero(FFElimError, ZeroDivisionError):
    pass


class ExactDivisionViolation(FFElimError, ArithmeticError):
    """A division that must be exact left a remainder.

    During elimination this can only mean a bug or corrupted input, since the
    algorithm never divides by anything that fails to divide the dividend.
    """


class ZeroPivot(FFElimError, ArithmeticError):
    pass


class SingularMatrix(FFElimError, ArithmeticError):
    pass


class TooLarge(FFElimError, ValueError):
    """Input exceeds the size guard of a factorial-cost routine."""


class InputError(FFElimError, ValueError):
    """Malformed or inconsistent user input."""


class EmptyInput(InputError):
    pass


class RaggedInput(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
