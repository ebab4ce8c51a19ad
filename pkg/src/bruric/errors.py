"""Exception hierarchy shared by every module."""


class BruricError(Exception):
    """Base class for all library errors."""


class UnsupportedType(BruricError):
    pass


class OverflowBudget(BruricError):
    """Enumeration would exceed the element cap."""


class BudgetExceeded(BruricError):
    """A computation was asked for outside its desk-scale range."""


class InvalidElement(BruricError):
    pass


class OddSigns(InvalidElement):
    """A type D window has an odd number of negative entries."""


class MissingValue(BruricError, KeyError):
    pass


class NotNormalized(BruricError, ValueError):
    pass


class EmptyBall(BruricError):
    pass


class IsolatedVertex(BruricError):
    pass


class HasTriangles(BruricError):
    pass


class NoConvergence(BruricError):
    def __init__(self, message, matrix=None):
        super().__init__(message)
        self.matrix = matrix


class CacheError(BruricError):
    pass


class ChecksumMismatch(CacheError):
    pass


class VersionMismatch(CacheError):
    pass


class ParseError(CacheError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class IoError(BruricError, OSError):
    pass
