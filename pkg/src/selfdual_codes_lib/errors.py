"""Exception vocabulary of selfdual_codes_lib.

Every error derives from :class:`SelfDualError` and from the builtin exception
matching its nature, so callers may catch either ``ValueError`` style builtins
or the specific class.
"""
from __future__ import annotations


class SelfDualError(Exception):
    """Root of all library errors."""


# --- Parameter validation ---

class InvalidInput(SelfDualError, ValueError):
    pass


class InvalidCharacteristic(InvalidInput):
    pass


class InvalidDegree(InvalidInput):
    pass


class InvalidScale(InvalidInput):
    pass


class NotCoprime(InvalidInput):
    pass


class ShapeMismatch(InvalidInput):
    pass


class HypothesisUnmet(InvalidInput):
    pass


class ZeroConstantTerm(InvalidInput):
    pass


class NotMonic(InvalidInput):
    pass


class NotADivisor(InvalidInput):
    pass


class EmptyCode(InvalidInput):
    pass


# --- Arithmetic ---

class FieldMismatch(SelfDualError, TypeError):
    pass


class DivisionByZero(SelfDualError, ZeroDivisionError):
    pass


class WildRamification(SelfDualError, ArithmeticError):
    """The root order shares a factor with the characteristic."""


class CharacteristicTwoUnsupported(SelfDualError, ArithmeticError):
    pass


class NegacyclicTrivialInCharTwo(CharacteristicTwoUnsupported):
    """x^n + 1 equals x^n - 1 over characteristic 2; pass a = +1 instead."""


class NoSquareRootOfMinusOne(SelfDualError, ArithmeticError):
    pass


# --- Oracle / persistence ---

class OracleRangeExceeded(SelfDualError, RuntimeError):
    pass


class CatalogCorruptError(SelfDualError, ValueError):
    def __init__(self, path: str, line_number: int, reason: str) -> None:
        self.path = path
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"Corrupt catalog {path} at line {line_number}: {reason}")
