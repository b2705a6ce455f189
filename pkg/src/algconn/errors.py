"""Exception types shared across the package."""


class GraphError(ValueError):
    """Base class for graph construction and query errors."""


class InvalidVertexError(GraphError):
    """A vertex id is outside 0..n-1."""


class DisconnectedGraphError(GraphError):
    """An operation requiring a connected graph received a disconnected one."""


class NotATreeError(GraphError):
    """A tree-only operation received a graph with a cycle."""


class NotACutVertexError(GraphError):
    """A cut-vertex operation received a non cut vertex."""


class NotABridgeError(GraphError):
    """An edge operation requiring a bridge received a cycle edge or non-edge."""


class GraftError(GraphError):
    """Grafting is impossible for the given path tags."""


class ParameterError(GraphError):
    """A family constructor parameter is outside its domain."""


class CapExceededError(GraphError):
    """An enumeration or canonical-form request exceeds the supported order."""


class EmptyClassError(GraphError):
    """An extremal query was made against an empty graph class."""


class FormatError(ValueError):
    """A graph file or string cannot be parsed."""


class ConvergenceError(RuntimeError):
    """An iterative numerical kernel failed to converge within its cap."""


class BalanceError(RuntimeError):
    """A balance-equation solve violated its monotonicity guarantees."""


class NotAFiedlerVectorError(ValueError):
    """A vector failed the eigen-residual check for the algebraic connectivity."""
