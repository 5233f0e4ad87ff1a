"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class CycleNotInGraph(GraphError):
    pass


class BadParameters(GraphError):
    pass


class PatternTooLarge(GraphError):
    pass


class NotInClass(GraphError):
    """The input is outside the class an operation requires.

    ``witness`` carries the offending structure when one was found.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class AmbiguousRoot(GraphError):
    pass


class ImproperInput(GraphError):
    pass


class LiftImpossible(GraphError):
    pass


class NotBipartite(GraphError):
    pass


class PreconditionViolated(GraphError):
    pass


class TooLarge(GraphError):
    pass


class NotGeneratable(GraphError):
    pass


class OracleBudgetExceeded(GraphError):
    pass


class StructureViolation(GraphError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class BadLength(GraphError):
    pass


class CapExceeded(GraphError):
    pass


class TheoremAnomaly(GraphError):
    """A theorem pipeline met an input its case analysis says cannot exist."""


class ParseError(GraphError):
    pass
