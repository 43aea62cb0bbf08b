"""Exception types raised across the package."""


class PerfcoalError(Exception):
    """Base class for all package-specific errors."""


class VertexIndexError(PerfcoalError, IndexError):
    """An edge endpoint or block index is outside 0..n-1."""


class SelfLoopError(PerfcoalError, ValueError):
    """An edge joins a vertex to itself."""


class MalformedRecordError(PerfcoalError, ValueError):
    """A graph6 or edge-list record cannot be decoded."""


class UnsupportedSizeError(PerfcoalError, ValueError):
    """Graph order exceeds what the representation supports."""


class TooLargeError(PerfcoalError, ValueError):
    """Input exceeds a solver's size guard."""


class OverlappingSetsError(PerfcoalError, ValueError):
    """Two vertex sets that must be disjoint share a vertex."""


class EmptySetError(PerfcoalError, ValueError):
    """A vertex set that must be nonempty is empty."""


class BadParamsError(PerfcoalError, ValueError):
    """Family parameters violate their allowed range."""


class NoPartitionError(PerfcoalError, ValueError):
    """No partition of the requested kind exists (e.g. P_3)."""
