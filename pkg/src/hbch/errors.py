"""Exception types raised by the public API.

Everything derives from ValueError so callers that do not care about the
precise failure can catch one class.  DivisionByZero additionally derives
from ZeroDivisionError.
"""


class CodingError(ValueError):
    """Base class for all errors raised by this package."""


# field construction / arithmetic
class NonPrime(CodingError):
    pass


class ReducibleModulus(CodingError):
    pass


class NonPrimitiveModulus(CodingError):
    pass


class FieldTooLarge(CodingError):
    pass


class NoBundledModulus(CodingError):
    pass


class DivisionByZero(CodingError, ZeroDivisionError):
    pass


class NotADivisor(CodingError):
    pass


# cosets
class NotCoprime(CodingError):
    pass


class IndexOutOfRange(CodingError):
    pass


class Exhausted(CodingError):
    pass


class NotCosetClosed(CodingError):
    """Internal invariant violation: a reduced defining set was not coset-closed."""


# evaluation codes
class LambdaTooLarge(CodingError):
    pass


class AlphabetMismatch(CodingError):
    pass


class BadRange(CodingError):
    pass


class TooLarge(CodingError):
    pass


class NonSquareAlphabet(CodingError):
    pass


# hermitian bounds
class BudgetExceeded(CodingError):
    pass


class NoSolution(CodingError):
    """Internal invariant violation: the bound equation always has solutions."""


class ExcludedCase(CodingError):
    pass


class AmbiguousCase(CodingError):
    pass


# quantum constructions
class NotSelfOrthogonal(CodingError):
    pass


class PreconditionViolated(CodingError):
    pass


class BoundExceeded(CodingError):
    pass
