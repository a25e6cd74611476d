"""Exception types shared across the package."""

from __future__ import annotations


class NicplanarError(Exception):
    """Base class for every error raised by this package."""


class GraphError(NicplanarError, ValueError):
    """Invalid graph construction input."""


class LoopEdge(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(GraphError):
    """The same unordered vertex pair appears twice in an edge list."""


class VertexOutOfRange(GraphError):
    """An edge references a vertex index outside ``[0, n)``."""


class TooSmall(GraphError):
    """The operation needs more vertices than the graph has."""


class ParseError(NicplanarError, ValueError):
    """Malformed input bytes.

    ``offset`` is the byte position at which parsing failed, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte {offset})"
        super().__init__(message)
        self.offset = offset


class NonSphericalEmbedding(NicplanarError):
    """A rotation system whose face count violates Euler's formula."""


class NotMaximalEmbedding(NicplanarError):
    """The embedding lacks the structure required of a maximal one."""


class LevelExceedsTwo(NicplanarError):
    """A dual node lies at distance greater than two from every kite node."""


class AccountingViolation(NicplanarError):
    """Quarter-sphere weights fall outside their proven bounds."""


class PreconditionViolated(NicplanarError):
    """A kite flip was requested on a configuration that does not admit one."""


class KTooSmall(NicplanarError, ValueError):
    """The requested family parameter is below the smallest valid size."""


class InvalidParameters(NicplanarError, ValueError):
    """Generator parameters outside the family's validity range."""


class LimitExceeded(NicplanarError):
    """The brute-force oracle was asked to search beyond its size limit."""
