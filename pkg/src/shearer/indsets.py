"""Independent-set oracles: exhaustive enumeration and exact max-weight search.

The max-weight solver is the pricing oracle for column generation, so it must
be exact and deterministic. It recurses on bitmask-induced subgraphs with
connected-component splitting, branches on a maximum-degree vertex, and
memoizes subproblems per call. Works for any weight type supporting +, >=
(floats, ints, Fractions).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLarge
from .graph import Graph

ENUMERATION_LIMIT = 20
MAXIMAL_LIMIT = 64


@dataclass(frozen=True, order=True)
class IndepSet:
    """An independent set, stored as a sorted vertex tuple."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.vertices


def is_independent(g: Graph, vertices) -> bool:
    verts = list(vertices)
    vset = set(verts)
    if len(vset) != len(verts):
        return False
    return all(not (g.neighbor_set(v) & vset) for v in vset)


def _neighbor_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _bits(mask: int):
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


def enumerate_all_independent_sets(g: Graph) -> list[IndepSet]:
    """Every independent set of g, including the empty set, in lex order."""
    if g.n > ENUMERATION_LIMIT:
        raise TooLarge(f"enumeration limited to n <= {ENUMERATION_LIMIT}, got n = {g.n}")
    nbr = _neighbor_masks(g)
    out: list[IndepSet] = []
    prefix: list[int] = []

    def rec(cand: int):
        out.append(IndepSet(tuple(prefix)))
        mm = cand
        while mm:
            b = mm & -mm
            mm ^= b
            v = b.bit_length() - 1
            prefix.append(v)
            rec(mm & ~nbr[v])
            prefix.pop()

    rec((1 << g.n) - 1)
    return out


def enumerate_maximal_independent_sets(g: Graph) -> list[IndepSet]:
    """All inclusion-maximal independent sets (pivoting Bron-Kerbosch).

    Runs on the complement graph, where maximal independent sets of g are
    exactly the maximal cliques.
    """
    if g.n > MAXIMAL_LIMIT:
        raise TooLarge(f"maximal-set enumeration limited to n <= {MAXIMAL_LIMIT}, got n = {g.n}")
    n = g.n
    full = (1 << n) - 1
    nbr = _neighbor_masks(g)
    co_nbr = [full & ~nbr[v] & ~(1 << v) for v in range(n)]
    out: list[int] = []

    def bk(r: int, p: int, x: int):
        if p == 0 and x == 0:
            out.append(r)
            return
        # pivot with the most candidates among its complement-neighbors
        best_u, best_cnt = -1, -1
        for u in _bits(p | x):
            cnt = (p & co_nbr[u]).bit_count()
            if cnt > best_cnt:
                best_u, best_cnt = u, cnt
        for v in _bits(p & ~co_nbr[best_u]):
            bit = 1 << v
            bk(r | bit, p & co_nbr[v], x & co_nbr[v])
            p &= ~bit
            x |= bit

    bk(0, full, 0)
    sets = [IndepSet(tuple(_bits(r))) for r in out]
    sets.sort()
    return sets


def make_mwis_solver(g: Graph, weights):
    """Build a memoized exact max-weight solver over vertex-subset masks.

    Returns solve(mask) -> (value, chosen_mask). Zero-weight vertices are
    ignored (they never change the value). Deterministic: components are
    processed lowest-bit first, branching prefers inclusion on ties.
    """
    n = g.n
    nbr = _neighbor_masks(g)
    closed = [nbr[v] | (1 << v) for v in range(n)]
    w = list(weights)
    pos = 0
    for v in range(n):
        if w[v] > 0:
            pos |= 1 << v
    memo: dict[int, tuple] = {}

    def component(mask: int) -> int:
        comp = mask & -mask
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= nbr[v] & mask
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        return comp

    def solve(mask: int):
        mask &= pos
        if mask == 0:
            return 0, 0
        hit = memo.get(mask)
        if hit is not None:
            return hit
        comp = component(mask)
        if comp != mask:
            v1, s1 = solve(comp)
            v2, s2 = solve(mask ^ comp)
            res = (v1 + v2, s1 | s2)
        else:
            best_v, best_deg = -1, -1
            for v in _bits(mask):
                deg = (nbr[v] & mask).bit_count()
                if deg > best_deg:
                    best_v, best_deg = v, deg
            if best_deg == 0:
                res = (w[best_v], 1 << best_v)
            else:
                iv, iset = solve(mask & ~closed[best_v])
                iv = iv + w[best_v]
                ev, eset = solve(mask & ~(1 << best_v))
                res = (iv, iset | (1 << best_v)) if iv >= ev else (ev, eset)
        memo[mask] = res
        return res

    return solve


def max_weight_value_and_witness(g: Graph, weights) -> tuple:
    """Exact maximum weight and one deterministic witness mask (fast path)."""
    solve = make_mwis_solver(g, weights)
    return solve((1 << g.n) - 1)


def max_weight_independent_set(g: Graph, weights) -> tuple[IndepSet, object]:
    """Exact maximum-weight independent set with lexicographic tie-breaking.

    Among optimal sets, returns the one whose sorted vertex sequence is
    smallest, except that zero-weight vertices are included greedily
    whenever compatible (they are free either way). The returned weight is
    the exact optimum value.
    """
    w = list(weights)
    if len(w) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(w)}")
    for v, wv in enumerate(w):
        if wv < 0:
            raise ValueError(f"negative weight {wv!r} at vertex {v}")
    nbr = _neighbor_masks(g)
    solve = make_mwis_solver(g, w)
    total, _ = solve((1 << g.n) - 1)

    # Greedy lexicographic reconstruction: include each vertex in turn iff
    # doing so still reaches the optimum. Both branch values are exact, so
    # ties resolve toward inclusion of the smaller index.
    avail = (1 << g.n) - 1
    chosen: list[int] = []
    acc = 0
    for v in range(g.n):
        bit = 1 << v
        if not (avail & bit):
            continue
        with_v = acc + w[v] + solve(avail & ~(nbr[v] | bit))[0]
        without_v = acc + solve(avail & ~bit)[0]
        if with_v >= without_v:
            chosen.append(v)
            acc = acc + w[v]
            avail &= ~(nbr[v] | bit)
        else:
            avail &= ~bit
    return IndepSet(tuple(chosen)), total
