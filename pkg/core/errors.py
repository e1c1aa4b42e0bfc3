"""
Exception hierarchy for rankforge.

Every error raised by the library derives from RankForgeError so callers
(the CLI in particular) can map failures to exit codes in one place.
"""


class RankForgeError(Exception):
    """Base class for all rankforge errors."""


# Field arithmetic

class FieldError(RankForgeError):
    pass


class NotPrime(FieldError, ValueError):
    pass


class Reducible(FieldError, ValueError):
    pass


class NoSuchDegree(FieldError):
    """No monic irreducible polynomial of the requested degree was found."""


class NotCoprime(FieldError, ValueError):
    pass


class OrderUnattainable(FieldError, ValueError):
    """The field contains no element of the requested multiplicative order."""


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class FieldTooLarge(FieldError, ValueError):
    pass


# Linear algebra

class LinalgError(RankForgeError):
    pass


class DimMismatch(LinalgError, ValueError):
    pass


class Singular(LinalgError, ValueError):
    pass


class WrongOrder(LinalgError, ValueError):
    pass


class NotOverBaseField(LinalgError, ValueError):
    """A matrix expected to lie over F_q has entries outside the prime field."""


# Code construction

class CodeError(RankForgeError):
    pass


class NotABasis(CodeError, ValueError):
    pass


class DependentBetas(CodeError, ValueError):
    pass


class PreconditionViolated(CodeError, ValueError):
    pass


class EnumerationTooLarge(CodeError):
    """Raised instead of sampling when a codebook exceeds the enumeration cap."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"enumeration of {size} messages exceeds cap {cap}")


class UnsupportedForCounting(CodeError, ValueError):
    pass


# Serialization

class FormatError(RankForgeError, ValueError):
    pass
