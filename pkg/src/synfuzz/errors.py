"""Exception types shared across the package."""


class SynfuzzError(Exception):
    """Base class for all library-specific errors."""


class NotPrimeError(SynfuzzError, ValueError):
    """The requested base-field modulus is not a prime number."""


class ReducibleModulusError(SynfuzzError, ValueError):
    """The supplied extension-field modulus polynomial is reducible."""


class NoDefaultModulusError(SynfuzzError, LookupError):
    """No built-in modulus polynomial is available for this field size."""


class NonPrimitiveAlphaError(SynfuzzError, ValueError):
    """The class of x is not a generator of the multiplicative group."""


class NotInAlgebraError(SynfuzzError, ValueError):
    """A matrix is not a polynomial in the companion matrix P."""


class LengthMismatchError(SynfuzzError, ValueError):
    """A word or message has the wrong number of symbols."""


class AlphabetMismatchError(SynfuzzError, ValueError):
    """A symbol falls outside the code's alphabet."""


class ShapeMismatchError(SynfuzzError, ValueError):
    """Input data does not have the exact shape the code expects."""


class ShapeUnsupportedError(SynfuzzError, ValueError):
    """The requested burst shape is not defined for this construction."""


class CapacityTooLargeError(SynfuzzError, ValueError):
    """The designed error capability does not fit the code length."""


class DecodeFailure(SynfuzzError):
    """No correctable error pattern is consistent with the syndrome."""


class TooManyErasuresError(SynfuzzError, ValueError):
    """More erasure positions than redundancy symbols."""


class IndexOutOfRangeError(SynfuzzError, IndexError):
    """Inner-code index or position outside the valid range."""


class QueryUnsupportedError(SynfuzzError, ValueError):
    """Capability query does not apply to this layout."""


class OutOfRangeError(SynfuzzError, ValueError):
    """Error pattern does not fit inside the word or array."""


class PlacementFailedError(SynfuzzError, RuntimeError):
    """Could not place the requested disjoint error pattern."""


class UnsupportedHashError(SynfuzzError, ValueError):
    """Unknown hash algorithm identifier."""


class SpecParseError(SynfuzzError, ValueError):
    """Malformed code specification string."""


class TemplateFormatError(SynfuzzError, ValueError):
    """Malformed or truncated template file."""
