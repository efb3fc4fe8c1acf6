"""Exception hierarchy for the duadic package.

Every error raised by the library derives from :class:`DuadicError`, so
callers can catch one type at the boundary.  Division by zero reuses the
builtin :class:`ZeroDivisionError` (also registered under the hierarchy via
multiple inheritance on :class:`ZeroElementError` where an explicit type is
needed).
"""


class DuadicError(Exception):
    """Base class for all library errors."""


class NotPrimeError(DuadicError, ValueError):
    """A claimed prime characteristic is composite (or < 2)."""


class FieldTooLargeError(DuadicError, ValueError):
    """Requested field order exceeds the supported envelope (2**20)."""


class FieldMismatchError(DuadicError, ValueError):
    """Arithmetic attempted between elements of different fields."""


class ZeroElementError(DuadicError, ZeroDivisionError):
    """Inverse (or discrete log) of the zero element requested."""


class OrderNotDividingError(DuadicError, ValueError):
    """No n-th root of unity: n does not divide q - 1."""


class NotCoprimeError(DuadicError, ValueError):
    """An argument that must be coprime to the modulus is not."""


class NotSubfieldError(DuadicError, ValueError):
    """The given pair of fields is not a subfield/extension pair."""


class CoefficientNotInSubfieldError(DuadicError, ValueError):
    """Projection asked for an element that lies outside the subfield."""


class NonSquareFieldError(DuadicError, ValueError):
    """A Hermitian operation requires a field of square order q**2."""


class NoSquareRootError(DuadicError, ValueError):
    """The element is not a square in this field."""


class NoNormPreimageError(DuadicError, ValueError):
    """The norm equation N(x) = c has no solution (c outside GF(q)*)."""


class NotUnionOfCosetsError(DuadicError, ValueError):
    """A defining set that must be a union of whole cosets is not."""


class LengthParityError(DuadicError, ValueError):
    """A construction needs the opposite length parity (odd vs even)."""


class DistanceNotExactError(DuadicError, ValueError):
    """MDS check demanded an exact distance but only bounds are known."""


class DegenerateParameterError(DuadicError, ValueError):
    """Parameters degenerate (e.g. the code length vanishes mod p)."""


class HypothesisViolatedError(DuadicError, ValueError):
    """Construction inputs fail the family's existence hypothesis."""


class NoGammaSolutionError(DuadicError, ValueError):
    """The extension-coefficient equation has no root in the field."""


class NoSplittingError(DuadicError, ValueError):
    """No duadic splitting of the required kind exists for (n, q)."""


class InvalidTableError(DuadicError, KeyError):
    """Unknown table identifier requested from the bundled data."""
