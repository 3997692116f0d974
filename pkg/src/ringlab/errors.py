"""Exception hierarchy shared by all ringlab modules."""


class RingLabError(Exception):
    """Base class for all ringlab errors."""


class ParseError(RingLabError):
    """Malformed ring-spec or element text."""


class DomainError(RingLabError):
    """Structurally invalid ring or element (1=0, infinite base, cap exceeded, ...)."""


class RingMismatch(RingLabError):
    """Operands belong to different rings."""


class InfiniteEnumeration(RingLabError):
    """An exhaustive enumeration was requested over an infinite ring."""


class UnsupportedRing(RingLabError):
    """Operation not defined for this ring kind."""


class NotCoprime(RingLabError):
    """A coprimality precondition failed."""


class ZeroElement(RingLabError):
    """The operation excludes the zero element."""


class PreconditionError(RingLabError):
    """A stated precondition of the operation does not hold."""


class NoDecomposition(RingLabError):
    """No decomposition satisfying the required identities was found."""


class NotClean(RingLabError):
    """An element admits no unit-plus-idempotent decomposition."""

    def __init__(self, message, element=None):
        super().__init__(message)
        self.element = element


class ConfigError(RingLabError):
    """Invalid harness configuration or catalog."""
