"""Exception hierarchy shared by all modules."""


class TrispectraError(Exception):
    """Base class for all library errors."""


class GraphError(TrispectraError):
    """Invalid graph input."""


class EmptyGraphError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class InvalidQError(TrispectraError):
    """q-triangulation parameter must be a positive integer."""


class SameNodeError(TrispectraError):
    """Hitting time requested from a node to itself."""


class InvalidNodeRefError(TrispectraError):
    """NodeRef does not describe a node of R_q(G)."""


class ConvergenceFailure(TrispectraError):
    """An eigendecomposition or factorization missed its residual target."""


class SingularSystemError(TrispectraError):
    """A linear system that must be regular on connected graphs was singular."""
