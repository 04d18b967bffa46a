"""Exception types shared across the package."""


class MinWeightError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(MinWeightError, ValueError):
    """Bad input: non-prime characteristic, k > n, n >= p where n < p is needed, ..."""


class CapacityError(MinWeightError):
    """A field or an enumeration would exceed the configured size limit."""


class FieldMismatchError(MinWeightError, TypeError):
    """Operands belong to different fields."""


class NotEnumerableError(MinWeightError, TypeError):
    """Enumeration was requested over an infinite field."""
