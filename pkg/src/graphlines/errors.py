"""Exception hierarchy shared by all modules."""


class GraphLinesError(ValueError):
    """Base class for every error raised by the package."""


class OrderOutOfRange(GraphLinesError):
    pass


class InvalidEdge(GraphLinesError):
    pass


class Disconnected(GraphLinesError):
    pass


class VertexOutOfRange(GraphLinesError):
    pass


class VerticesNotDistinct(GraphLinesError):
    pass


class MalformedGraph6(GraphLinesError):
    pass


class DiameterNotThree(GraphLinesError):
    pass


class DistanceNotThree(GraphLinesError):
    pass


class NotInR(GraphLinesError):
    """The vertex has no coincidence between its distance-2 and distance-3 lines."""


class RNotEmpty(GraphLinesError):
    """Some vertex of the graph has a distance-2/distance-3 line coincidence."""


class InvalidSpec(GraphLinesError):
    pass


class UnknownName(GraphLinesError):
    pass


class HypothesisViolated(GraphLinesError):
    pass


class CorruptCheckpoint(GraphLinesError):
    pass


class VersionMismatch(CorruptCheckpoint):
    pass
