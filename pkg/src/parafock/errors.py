"""Exception types shared across the package.

Everything raised deliberately by this library derives from ParafockError, so
callers (the command line front end in particular) can distinguish "the input
was bad" from "the mathematics failed to verify" from a genuine bug.
"""


class ParafockError(Exception):
    """Base class for all errors raised on purpose by this package."""


class ConfigError(ParafockError):
    """Invalid parameters: bad order p, bad truncation, malformed options."""


class TruncationOverflow(ParafockError):
    """An operator application would leave the truncated carrier space."""


class TruncationTooSmall(ParafockError):
    """The truncation cannot support the requested check (margin too large)."""


class SpecInvalid(ParafockError):
    """A superalgebra description failed structural validation."""


class UnknownElement(ParafockError):
    """A basis element name is not part of the given superalgebra."""


class DimensionZero(ParafockError):
    """The addressed weight cell contains no basis vectors."""


class GramDegenerate(ParafockError):
    """A Gram matrix is singular where an orthogonal basis was requested."""
