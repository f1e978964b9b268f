"""Exception types shared across the package."""


class ParkfnError(Exception):
    """Base class for all errors raised by :mod:`parkfn`."""


class InvalidInputError(ParkfnError, ValueError):
    """Malformed argument: empty sequence, entry < 1, bad block sizes, ..."""


class ParkingFailure(ParkfnError):
    """A car probed past the last spot, so the input is not a parking function."""


class LimitExceeded(ParkfnError):
    """An exhaustive enumeration was requested above the configured bound."""


class PoleError(ParkfnError, ZeroDivisionError):
    """A zero base was raised to a negative power."""


class ConsistencyError(ParkfnError, AssertionError):
    """Two independent computations disagreed, or an exact count came out fractional."""
