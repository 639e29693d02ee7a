"""Exception types shared across the package."""


class ShearerError(Exception):
    """Base class for all package errors."""


class GraphError(ShearerError):
    """Invalid graph construction input."""


class OutOfRange(GraphError):
    """Vertex id outside 0..n-1."""


class SelfLoop(GraphError):
    """Edge joining a vertex to itself."""


class InvalidSpec(ShearerError):
    """Generator spec that cannot produce the requested graph."""


class DomainError(ShearerError):
    """Function argument outside its mathematical domain."""


class TooLarge(ShearerError):
    """Instance exceeds the enumeration budget."""


class NotTriangleFree(ShearerError):
    """A certifier was asked to run on a graph containing a triangle."""


class Disconnected(ShearerError):
    """Operation requires a connected graph; caller must decompose first."""


class IsolatedVertex(ShearerError):
    """Operation requires a graph without isolated vertices."""


class NotNormalized(ShearerError):
    """Weight function must be normalized to total weight 1."""


class NotConverged(ShearerError):
    """Iterative method exhausted its iteration budget."""


class PricingBudgetExceeded(ShearerError):
    """Column generation did not converge within the pricing-round budget."""


class SupportNotIndependent(ShearerError):
    """A distribution's support contains a set that is not independent."""


class ParseError(ShearerError):
    """Graph file does not match the edge-list or DIMACS grammar."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
