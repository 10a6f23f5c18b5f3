"""Exception types shared across the package.

Division by zero in a field raises the builtin ZeroDivisionError; everything
else funnels through RscweError so callers can catch one base class.
"""

from __future__ import annotations


class RscweError(Exception):
    """Base class for all package-specific errors."""


class InvalidPrimeError(RscweError):
    """The characteristic p is not a prime number."""


class SizeLimitError(RscweError):
    """A requested field or enumeration exceeds the configured budget."""

    def __init__(self, message: str, budget: int | None = None):
        super().__init__(message)
        self.budget = budget


class CharacteristicTwoError(RscweError):
    """Operation requires odd characteristic (quadratic character, Gauss sums)."""


class MixedCyclotomicOrderError(RscweError):
    """Arithmetic attempted between cyclotomic integers of different orders."""


class DegenerateQuadraticError(RscweError):
    """A leading quadratic coefficient that must be nonzero is zero."""


class DuplicateEvaluationPointError(RscweError):
    """An evaluation set contains a repeated point."""


class DimensionMismatchError(RscweError):
    """Message length does not match the code dimension k."""


class ParameterOutOfRangeError(RscweError):
    """A parameter violates a documented precondition (e.g. k > n, q too small)."""


class ShapeMismatchError(RscweError):
    """Two enumerators with different (q, n) were compared."""


class ParseError(RscweError):
    """Serialized input violates the canonical JSON schema."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path
