"""Exception types shared across the library."""


class OneSpernerError(Exception):
    """Base class for all library-specific errors."""


class InvalidLabel(OneSpernerError):
    """A vertex label is empty or contains whitespace or '#'."""


class DuplicateVertex(OneSpernerError):
    """The same vertex label appears twice in one vertex list."""


class DuplicateEdge(OneSpernerError):
    """The same hyperedge (or graph edge) was given twice."""


class UnknownVertex(OneSpernerError):
    """An edge or query mentions a vertex outside the vertex list."""


class LoopEdge(OneSpernerError):
    """A graph edge joins a vertex to itself."""


class NotSperner(OneSpernerError):
    """The operation requires a Sperner hypergraph (a clutter)."""


class NotOneSperner(OneSpernerError):
    """The operation requires a 1-Sperner hypergraph."""


class NotUniform(OneSpernerError):
    """The operation requires an r-uniform hypergraph with r >= 1."""


class NotDecomposable(OneSpernerError):
    """The hypergraph cannot be split at the requested vertex."""


class EmptyVertexSet(OneSpernerError):
    """The operation needs at least one vertex."""


class VertexCollision(OneSpernerError):
    """Gluing factors share a vertex label, or the new vertex is not fresh."""


class UnsafeGluing(OneSpernerError):
    """A decomposition tree node glues a full-edge factor onto an empty-edge factor."""

    def __init__(self, message: str, z: str | None = None):
        super().__init__(message)
        self.z = z


class DegenerateEdgeSet(OneSpernerError):
    """The edge set is empty or consists of the empty edge only."""


class InvalidGenerator(OneSpernerError):
    """Generator parameters violate the construction's preconditions."""


class CapExceeded(OneSpernerError):
    """The input is larger than the configured exhaustive-work cap."""


class SizeCapExceeded(CapExceeded):
    """A matrix exceeds the permutation-equivalence size cap."""


class ParseError(OneSpernerError):
    """A text document is malformed; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
