"""Exception hierarchy for the matchsticks package."""


class MatchstickError(Exception):
    """Base class for all domain errors raised by this package."""


class DegenerateSegment(MatchstickError):
    """A segment's endpoints coincide within the geometric tolerance."""


class NotARhombus(MatchstickError):
    """Four points do not bound a simple unit-sided quadrilateral."""


class AmbiguousAngles(MatchstickError):
    """Two edges at a vertex have the same direction within tolerance."""


class Disconnected(MatchstickError):
    """Operation requires a connected graph."""


class UnknownEdge(MatchstickError):
    """Edge id is not present in the graph."""


class MissingRadius(MatchstickError):
    """A disk radius is required to decide fatness thresholds."""


class InfeasibleRadius(MatchstickError):
    """Disk radius too small for the lattice construction (needs r >= 2)."""


class NonpositiveRadius(MatchstickError):
    """Disk radius must be positive."""


class NotMonotone(MatchstickError):
    """Vertex sequence is not an x-monotone path."""


class NotReduced(MatchstickError):
    """Graph still contains a triangular or fat rhombic face."""


class AmbiguousHull(MatchstickError):
    """Face corners do not have distinct x-coordinates after rotation."""


class Unreachable(MatchstickError):
    """Target node not reachable in the neighborhood graph."""


class GraphFormatError(MatchstickError):
    """Graph file does not follow the canonical JSON contract."""


class ConstructionError(MatchstickError):
    """A generator produced a graph that failed its own validation."""


class BudgetExceeded(MatchstickError):
    """Search budget ran out before the family was fully enumerated.

    Carries the best result found so far in ``result``.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result
