"""Immutable simple undirected graphs and the structural reductions used here.

Vertices are dense ids 0..n-1. Graphs derived by deleting vertices carry a
``parent_ids`` table mapping their new dense ids back to the ids of the graph
they were cut from, because marginals and certificates must be reported
against original vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRange, SelfLoop


class Graph:
    """Simple undirected graph; immutable after construction.

    Attributes:
        n: vertex count.
        edges: sorted tuple of (u, v) pairs with u < v, deduplicated.
        adjacency: per-vertex sorted neighbor tuples.
        parent_ids: for derived graphs, parent_ids[i] is the id of vertex i
            in the graph this one was cut from; None for root graphs.
    """

    __slots__ = ("n", "edges", "adjacency", "parent_ids", "_adj_sets")

    def __init__(self, n: int, edge_list, parent_ids=None):
        if n < 0:
            raise OutOfRange(f"vertex count must be >= 0, got {n}")
        seen = set()
        for u, v in edge_list:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < n) or not (0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            seen.add((u, v) if u < v else (v, u))
        edges = tuple(sorted(seen))
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "parent_ids", tuple(parent_ids) if parent_ids is not None else None)
        object.__setattr__(self, "_adj_sets", tuple(frozenset(a) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset:
        return self._adj_sets[v]

    def closed_neighborhood(self, v: int) -> frozenset:
        return self._adj_sets[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def __reduce__(self):
        return (Graph, (self.n, self.edges, self.parent_ids))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GraphStats:
    """Degree data and the triangle-freeness flag for one graph."""

    degrees: tuple[int, ...]
    max_degree: int
    neighbor_degree_sums: tuple[int, ...]
    triangle_free: bool


def build_graph(n: int, edge_list) -> Graph:
    """Construct a validated Graph from an edge list (duplicates collapsed)."""
    return Graph(n, edge_list)


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are mutually adjacent.

    Neighborhood-intersection scan over edges: O(sum of d(v)^2).
    """
    for u, v in g.edges:
        small, large = (u, v) if g.degree(u) <= g.degree(v) else (v, u)
        nbrs = g.neighbor_set(large)
        for w in g.adjacency[small]:
            if w != large and w in nbrs:
                return False
    return True


def stats(g: Graph) -> GraphStats:
    """Compute degree data, S_G(v) sums of neighbor degrees, and triangle flag."""
    degs = g.degrees()
    sums = tuple(sum(degs[u] for u in g.adjacency[v]) for v in range(g.n))
    return GraphStats(
        degrees=degs,
        max_degree=max(degs, default=0),
        neighbor_degree_sums=sums,
        triangle_free=is_triangle_free(g),
    )


def induced_subgraph(g: Graph, keep) -> Graph:
    """Induced subgraph on the given vertices, remapped to dense ids.

    The result's parent_ids maps back to ids of ``g`` itself (one level up,
    not all the way to the root of a derivation chain).
    """
    keep = sorted(set(keep))
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return Graph(len(keep), edges, parent_ids=keep)


def remove_closed_neighborhood(g: Graph, u: int) -> Graph:
    """The graph G - closed_neighborhood(u), with a parent-id table."""
    if not (0 <= u < g.n):
        raise OutOfRange(f"vertex {u} outside 0..{g.n - 1}")
    banned = g.closed_neighborhood(u)
    return induced_subgraph(g, (v for v in range(g.n) if v not in banned))


def peel_order(g: Graph, d: int) -> list[tuple[int, int]]:
    """Vertices removed on the way to the d-core, as (vertex, degree) pairs.

    Repeatedly removes the smallest-index vertex of current degree < d.
    Degrees recorded are taken at removal time. The surviving vertex set is
    independent of removal order; the order itself is fixed for
    reproducibility.
    """
    degs = list(g.degrees())
    alive = [True] * g.n
    order: list[tuple[int, int]] = []
    pending = sorted(v for v in range(g.n) if degs[v] < d)
    while pending:
        nxt = []
        for v in pending:
            if alive[v] and degs[v] < d:
                alive[v] = False
                order.append((v, degs[v]))
                for u in g.adjacency[v]:
                    if alive[u]:
                        degs[u] -= 1
                        if degs[u] < d:
                            nxt.append(u)
        pending = sorted(set(nxt))
    return order


def d_core(g: Graph, d: int) -> Graph:
    """Maximal induced subgraph of minimum degree >= d (possibly empty)."""
    removed = {v for v, _ in peel_order(g, d)}
    return induced_subgraph(g, (v for v in range(g.n) if v not in removed))


def components(g: Graph) -> list[Graph]:
    """Connected components as remapped graphs, ordered by smallest vertex id."""
    seen = [False] * g.n
    out: list[Graph] = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        out.append(induced_subgraph(g, comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def graph_hash(g: Graph) -> str:
    """Short deterministic digest of (n, edge set), for report provenance."""
    import hashlib

    payload = f"{g.n};" + ",".join(f"{u}-{v}" for u, v in g.edges)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]
