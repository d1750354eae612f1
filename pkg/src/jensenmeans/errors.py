"""Exception hierarchy for the quotient-means library."""


class MeansError(Exception):
    """Base class for every error raised by this package."""


class DomainError(MeansError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class UsageError(MeansError, ValueError):
    """The operation was invoked in a way its contract forbids."""


class DegenerateSampleError(MeansError, ZeroDivisionError):
    """All sample points coincide, so a quotient of Jensen gaps is 0/0."""


class InvalidPairError(MeansError, ValueError):
    """The (f, g) pair is unusable: its g-gap is not strictly positive."""


class InvalidReportError(MeansError, ValueError):
    """A moment report violates its internal consistency requirements."""


class BracketError(MeansError, RuntimeError):
    """A root or threshold bracket does not contain a sign change."""
