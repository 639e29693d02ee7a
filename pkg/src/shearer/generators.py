"""Graph generators for the triangle-free verification corpus."""

from __future__ import annotations

import random
from itertools import combinations

from .errors import InvalidSpec
from .graph import Graph, build_graph, is_triangle_free


def cycle(n: int) -> Graph:
    """Cycle C_n, n >= 3."""
    if n < 3:
        raise InvalidSpec(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path P_n on n vertices."""
    if n < 1:
        raise InvalidSpec(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Complete bipartite graph K_{a,b}; sides are 0..a-1 and a..a+b-1."""
    if a < 0 or b < 0:
        raise InvalidSpec("complete_bipartite needs non-negative side sizes")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    """Star K_{1,leaves} with center 0."""
    return build_graph(leaves + 1, [(0, i + 1) for i in range(leaves)])


def petersen() -> Graph:
    """Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return build_graph(10, edges)


def kneser(n: int, k: int) -> Graph:
    """Kneser graph K(n, k): k-subsets of an n-set, adjacent iff disjoint.

    Restricted to n < 3k, which guarantees triangle-freeness (three pairwise
    disjoint k-sets need 3k ground elements). Vertex ids follow the
    lexicographic order of the subsets.
    """
    if k < 1 or n < k:
        raise InvalidSpec(f"kneser needs 1 <= k <= n, got n={n}, k={k}")
    if n >= 3 * k:
        raise InvalidSpec(f"kneser({n},{k}) admits triangles (needs n < 3k)")
    subsets = [frozenset(c) for c in combinations(range(n), k)]
    edges = [
        (i, j)
        for i in range(len(subsets))
        for j in range(i + 1, len(subsets))
        if not (subsets[i] & subsets[j])
    ]
    return build_graph(len(subsets), edges)


def mycielski(base: Graph) -> Graph:
    """Mycielski construction on 2n+1 vertices and 3m+n edges.

    Vertices 0..n-1 copy the base, n..2n-1 are the shadow vertices, and 2n
    is the apex joined to every shadow vertex. Preserves triangle-freeness
    and raises the fractional chromatic number from r to r + 1/r.
    """
    n = base.n
    edges = list(base.edges)
    edges += [(n + i, j) for i, j in base.edges] + [(n + j, i) for i, j in base.edges]
    edges += [(n + i, 2 * n) for i in range(n)]
    return build_graph(2 * n + 1, edges)


def triangle_free_process(n: int, seed: int) -> Graph:
    """Greedy randomized triangle-free process, run to saturation.

    Repeatedly inserts a uniformly random non-edge whose addition closes no
    triangle, until no such pair remains. The result is maximal
    triangle-free (hence connected for n >= 2) and a pure function of
    (n, seed).
    """
    if n < 1:
        raise InvalidSpec(f"triangle_free_process needs n >= 1, got {n}")
    rng = random.Random(f"tfp:{n}:{seed}")
    adj = [set() for _ in range(n)]
    candidates = {(u, v) for u in range(n) for v in range(u + 1, n)}
    edges = []
    while candidates:
        u, v = rng.choice(sorted(candidates))
        candidates.discard((u, v))
        if adj[u] & adj[v]:
            continue
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
        # drop pairs this edge just closed a triangle for
        for w in adj[u]:
            if w != v:
                candidates.discard((min(v, w), max(v, w)))
        for w in adj[v]:
            if w != u:
                candidates.discard((min(u, w), max(u, w)))
    return build_graph(n, edges)


def random_bipartite(a: int, b: int, p: float, seed: int) -> Graph:
    """Bipartite G(a, b, p): each cross pair kept independently with prob p."""
    if not 0.0 <= p <= 1.0:
        raise InvalidSpec(f"edge probability must be in [0,1], got {p}")
    rng = random.Random(f"bip:{a}:{b}:{seed}")
    edges = [
        (i, a + j)
        for i in range(a)
        for j in range(b)
        if rng.random() < p
    ]
    return build_graph(a + b, edges)


def generate(kind: str, *, n=None, k=None, a=None, b=None, p=None, seed=None, base=None) -> Graph:
    """Dispatch a generator spec by name.

    Kinds: cycle(n), complete_bipartite(a,b), petersen, kneser(n,k),
    mycielski(base), tfp(n,seed), bipartite(a,b,p,seed). Raises InvalidSpec
    for unknown kinds or missing parameters.
    """

    def need(value, name):
        if value is None:
            raise InvalidSpec(f"generator '{kind}' requires parameter '{name}'")
        return value

    if kind == "cycle":
        return cycle(need(n, "n"))
    if kind == "complete_bipartite":
        return complete_bipartite(need(a, "a"), need(b, "b"))
    if kind == "petersen":
        return petersen()
    if kind == "kneser":
        return kneser(need(n, "n"), need(k, "k"))
    if kind == "mycielski":
        return mycielski(need(base, "base"))
    if kind == "tfp":
        return triangle_free_process(need(n, "n"), need(seed, "seed"))
    if kind == "bipartite":
        return random_bipartite(need(a, "a"), need(b, "b"), need(p, "p"), need(seed, "seed"))
    raise InvalidSpec(f"unknown generator kind '{kind}'")


def grotzsch() -> Graph:
    """The Grotzsch graph: Mycielski of C5 (11 vertices, 20 edges)."""
    return mycielski(cycle(5))


__all__ = [
    "cycle",
    "path",
    "complete_bipartite",
    "star",
    "petersen",
    "kneser",
    "mycielski",
    "grotzsch",
    "triangle_free_process",
    "random_bipartite",
    "generate",
    "is_triangle_free",
]
