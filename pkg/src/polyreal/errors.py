"""Exception hierarchy.

Everything raised on purpose by this package derives from PolyrealError,
so callers can catch one type at the CLI boundary.  Division by zero in
the cyclotomic field reuses the builtin ZeroDivisionError.
"""


class PolyrealError(Exception):
    """Base class for all package errors."""


class CapExceeded(PolyrealError):
    """Group enumeration passed the configured element cap."""


class DegreeMismatch(PolyrealError):
    """Permutations of different degrees were combined."""


class OrderCapExceeded(PolyrealError):
    """A cyclotomic computation would leave the supported field tower."""


class PrimeSearchFailed(PolyrealError):
    """No usable characteristic was found for the modular character lift."""


class NonIntegralMultiplicity(PolyrealError):
    """A constituent multiplicity came out non-integral (internal check)."""


class MultiplicityNotOne(PolyrealError):
    """Operation requires a multiplicity-one constituent."""


class DimensionMismatch(PolyrealError):
    """Vectors or matrices of incompatible shape were combined."""


class NotPSD(PolyrealError):
    """Matrix has an eigenvalue below the negativity tolerance."""


class NotInvariant(PolyrealError):
    """Matrix is not constant on the orbits it must be constant on."""


class RankTooLarge(PolyrealError):
    """String C-group verification is limited to small rank."""


class PrimeTooLarge(PolyrealError):
    """Projective group constructor is limited to small primes."""


class NotPrime(PolyrealError):
    """Parameter expected to be prime is not."""


class InvalidParams(PolyrealError):
    """Parameters violate a documented precondition."""


class StringCFailed(PolyrealError):
    """Generators do not satisfy the string C-group conditions."""


class NoMatch(PolyrealError):
    """Expected constituent pattern was not found."""


class CrossCheckFailed(PolyrealError):
    """Two independent computation routes disagree."""


class ProfileMismatch(PolyrealError):
    """Computed decomposition profile differs from the expected one."""


class MultiplicityMismatch(PolyrealError):
    """A constituent multiplicity differs from the required value."""


class ClosureOverflow(PolyrealError):
    """Multiplicative closure grew past its expected size."""
