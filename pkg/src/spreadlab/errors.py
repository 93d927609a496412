"""Exception types shared across the library."""


class SpreadlabError(Exception):
    """Base class for all library errors."""


class ParseError(SpreadlabError):
    """Malformed textual graph input (graph6 or edge list)."""


class NotConnectedError(SpreadlabError):
    """Operation requires a connected graph.

    Carries a pair of mutually unreachable vertices (0-indexed).
    """

    def __init__(self, u, v):
        self.u = u
        self.v = v
        super().__init__(f"graph is not connected: no path between vertex {u + 1} and vertex {v + 1}")


class NotBipartiteError(SpreadlabError):
    """Operation requires a bipartite graph.

    Carries a closed odd-length walk witnessing an odd cycle.
    """

    def __init__(self, odd_walk):
        self.odd_walk = tuple(odd_walk)
        super().__init__(f"graph is not bipartite: odd closed walk {[v + 1 for v in self.odd_walk]}")


class NotCactusError(SpreadlabError):
    """Graph has a biconnected block that is neither an edge nor a cycle."""

    def __init__(self, block_vertices):
        self.block_vertices = tuple(sorted(block_vertices))
        super().__init__(
            "graph is not a cactus: block on vertices "
            f"{[v + 1 for v in self.block_vertices]} has more edges than vertices"
        )


class AcyclicError(SpreadlabError):
    """Graph is a tree; it has no cycle and therefore no circumference."""


class DegenerateBoundError(SpreadlabError):
    """A bound's quotient partition would have an empty second block."""


class NumericError(SpreadlabError):
    """Numerical failure in the eigensolver (non-convergence, bad discriminant)."""
