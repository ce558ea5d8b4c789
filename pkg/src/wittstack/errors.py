"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`WittstackError`; the CLI maps those to exit code 1.
"""


class WittstackError(Exception):
    """Base class for domain errors."""


class DomainError(WittstackError, ValueError):
    pass


class NotPrime(DomainError):
    pass


class MismatchedRing(WittstackError, TypeError):
    pass


class BadLength(DomainError):
    pass


class CapExceeded(WittstackError):
    """(p, n) lies outside the configured Witt polynomial caps."""


class InternalPrecision(WittstackError, ArithmeticError):
    """A series operation could not deliver a single significant term."""


class PrecisionExhausted(InternalPrecision):
    """A reduction loop needed coefficients beyond the available precision."""


class NonTerminating(WittstackError, RuntimeError):
    """An iteration guard tripped; indicates a bug rather than bad input."""


class NonIntegralLowerJump(DomainError):
    pass


class UnsupportedBase(WittstackError):
    pass


class IrrationalBranchPoint(WittstackError):
    pass


class ParseError(DomainError):
    pass
