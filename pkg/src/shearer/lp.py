"""Min-slack distribution LP and fractional chromatic number by column generation.

Both problems range over all independent sets of a graph, exponentially many
columns. A restricted master is solved by the revised simplex and extended by
an exact max-weight independent-set pricing oracle until no improving column
exists; at that point the master's duals certify optimality over the full
column set (exactly in rational mode, within the reported gap in float mode).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PricingBudgetExceeded
from .jsonutil import num_json as _num_json
from .graph import Graph
from .indsets import IndepSet, make_mwis_solver
from .simplex import RevisedSimplex


@dataclass(frozen=True)
class Distribution:
    """Finitely supported probability distribution over independent sets."""

    support: tuple[tuple[IndepSet, object], ...]

    @property
    def exact(self) -> bool:
        return all(isinstance(p, (Fraction, int)) for _, p in self.support)

    def total_probability(self):
        return sum(p for _, p in self.support)

    def to_jsonable(self) -> list:
        return [{"set": list(s.vertices), "prob": _num_json(p)} for s, p in self.support]


def make_distribution(pairs) -> Distribution:
    """Canonicalize (vertices, probability) pairs: merge duplicates, drop zeros."""
    acc: dict[tuple[int, ...], object] = {}
    for verts, p in pairs:
        key = tuple(sorted(verts))
        if key in acc:
            acc[key] = acc[key] + p
        else:
            acc[key] = p
    entries = tuple((IndepSet(k), p) for k, p in sorted(acc.items()) if p != 0)
    return Distribution(entries)


def marginals(dist: Distribution, n: int) -> list:
    """Per-vertex containment probabilities; exact for exact distributions."""
    out = [0] * n
    for s, p in dist.support:
        for v in s.vertices:
            out[v] = out[v] + p
    return out


def expected_size(dist: Distribution):
    return sum(len(s) * p for s, p in dist.support)


@dataclass(frozen=True)
class LPResult:
    """Solution of the min-slack LP with its dual optimality certificate."""

    y_star: object
    distribution: Distribution
    duals: tuple
    gap: object
    iterations: int

    def to_jsonable(self) -> dict:
        return {
            "y_star": _num_json(self.y_star),
            "support": self.distribution.to_jsonable(),
            "duals": [_num_json(d) for d in self.duals],
            "gap": _num_json(self.gap),
            "iterations": self.iterations,
        }


@dataclass(frozen=True)
class ChiFractional:
    """Fractional chromatic number with cover weights and dual certificate."""

    value: object
    cover: tuple[tuple[IndepSet, object], ...]
    duals: tuple
    gap: object
    iterations: int

    def to_jsonable(self) -> dict:
        return {
            "value": _num_json(self.value),
            "cover": [{"set": list(s.vertices), "weight": _num_json(w)} for s, w in self.cover],
            "duals": [_num_json(d) for d in self.duals],
            "gap": _num_json(self.gap),
            "iterations": self.iterations,
        }


def warm_start_columns(g: Graph) -> list[tuple[int, ...]]:
    """Singletons plus greedily grown maximal sets, one seeded per vertex."""
    cols = {(v,) for v in range(g.n)}
    for v in range(g.n):
        chosen = [v]
        banned = set(g.closed_neighborhood(v))
        for u in range(g.n):
            if u not in banned:
                chosen.append(u)
                banned.add(u)
                banned |= g.neighbor_set(u)
        cols.add(tuple(sorted(chosen)))
    return sorted(cols)


def _check_mode(mode: str):
    if mode not in ("float", "exact"):
        raise ValueError(f"mode must be 'float' or 'exact', got {mode!r}")


def _prepare_targets(targets, n: int, exact: bool):
    ts = list(targets)
    if len(ts) != n:
        raise ValueError(f"expected {n} targets, got {len(ts)}")
    out = []
    for v, t in enumerate(ts):
        if exact:
            if isinstance(t, float):
                raise ValueError(f"exact mode requires rational targets; target {v} is a float")
            t = Fraction(t)
        else:
            t = float(t)
        if t < 0 or t > 1:
            raise ValueError(f"target {v} = {t} outside [0, 1]")
        out.append(t)
    return out


def _price(g: Graph, lam: list, exact: bool):
    """Max-weight independent set under the duals; returns (value, vertices)."""
    if exact:
        denom = math.lcm(*(f.denominator for f in lam)) if lam else 1
        weights = [int(f * denom) for f in lam]
        solve = make_mwis_solver(g, weights)
        val, mask = solve((1 << g.n) - 1)
        value = Fraction(val, denom)
    else:
        weights = [x if x > 0.0 else 0.0 for x in lam]
        solve = make_mwis_solver(g, weights)
        value, mask = solve((1 << g.n) - 1)
    verts = tuple(v for v in range(g.n) if (mask >> v) & 1)
    return value, verts


def _clamped(lam, exact):
    if exact:
        return list(lam)
    return [x if x > 0.0 else 0.0 for x in lam]


@dataclass
class _EngineState:
    master: RevisedSimplex
    col_sets: dict
    lam: list
    price_value: object
    rounds: int
    generated: list


def _run_engine(
    g: Graph,
    master: RevisedSimplex,
    add_set,
    dual_slice,
    violation_of,
    exact: bool,
    tol: float,
    pricing_budget: int,
    extra_sets,
    start_basis,
) -> _EngineState:
    """Shared column-generation loop around a prepared restricted master."""
    pool: set[tuple[int, ...]] = set()
    col_sets: dict[int, tuple[int, ...]] = {}

    def add(verts):
        idx = add_set(verts)
        col_sets[idx] = verts
        pool.add(verts)

    for verts in warm_start_columns(g):
        add(verts)
    for verts in extra_sets:
        if verts not in pool:
            add(verts)
    if start_basis is not None:
        master.set_basis(start_basis)  # fall back to two-phase when False

    price_tol = Fraction(0) if exact else tol
    rounds = 0
    generated: list[tuple[int, ...]] = []
    while True:
        master.solve()
        lam, offset = dual_slice(master.duals())
        value, verts = _price(g, lam, exact)
        if violation_of(value, offset) <= price_tol:
            break
        rounds += 1
        if rounds > pricing_budget:
            raise PricingBudgetExceeded(f"no convergence after {pricing_budget} pricing rounds")
        if verts in pool:
            # float-mode stall: the master already holds this column, so the
            # remaining violation is roundoff; report it through the gap
            break
        add(verts)
        generated.append(verts)
    return _EngineState(master, col_sets, lam, value, rounds, generated)


def _min_slack_engine(g, ts, exact, tol, pricing_budget, extra_sets=(), start_basis=None):
    n = g.n
    master = RevisedSimplex(list(ts) + [Fraction(1) if exact else 1.0], exact=exact)
    master.add_column(1, {r: 1 for r in range(n)})    # y+
    master.add_column(-1, {r: -1 for r in range(n)})  # y-
    for v in range(n):
        master.add_column(0, {v: -1})                 # surplus

    def add_set(verts):
        entries = {v: 1 for v in verts}
        entries[n] = 1
        return master.add_column(0, entries)

    def dual_slice(y):
        return _clamped(y[:n], exact), y[n]

    return _run_engine(
        g, master, add_set, dual_slice,
        lambda value, mu: value + mu,
        exact, tol, pricing_budget, extra_sets, start_basis,
    )


def _chi_engine(g, exact, tol, pricing_budget, extra_sets=(), start_basis=None):
    n = g.n
    one = Fraction(1) if exact else 1.0
    master = RevisedSimplex([one] * n, exact=exact)
    for v in range(n):
        master.add_column(0, {v: -1})  # surplus

    def add_set(verts):
        return master.add_column(1, {v: 1 for v in verts})

    def dual_slice(y):
        return _clamped(y, exact), None

    return _run_engine(
        g, master, add_set, dual_slice,
        lambda value, _offset: value - 1,
        exact, tol, pricing_budget, extra_sets, start_basis,
    )


def _float_seed(engine_run) -> tuple[list, list | None]:
    """Column pool and basis of a float presolve, for seeding an exact run."""
    state = engine_run()
    basis = state.master.basis_snapshot()
    if basis is None or any(j < 0 for j in basis):
        basis = None
    return state.generated, basis


def _extract_support(state: _EngineState, exact: bool):
    out = []
    for idx, x in state.master.primal().items():
        verts = state.col_sets.get(idx)
        if verts is not None and x > (0 if exact else 1e-12):
            out.append((verts, x))
    return out


def solve_min_slack(
    g: Graph,
    targets,
    mode: str = "float",
    tol: float = 1e-9,
    pricing_budget: int = 5000,
) -> LPResult:
    """Minimize y such that some distribution has marginal(v) + y >= target(v).

    The optimum y* may be negative (the targets are over-achievable). The
    returned duals lambda are non-negative, sum to 1, and provide the bound
    sum(lambda.t) - maxIS(lambda) <= y*; ``gap`` is the difference between
    the primal value and that bound (0 in exact mode).

    Exact mode requires rational targets. It first runs a float presolve and
    seeds the rational master with the presolve's columns and basis, so the
    exact pivots mostly just confirm optimality.
    """
    _check_mode(mode)
    exact = mode == "exact"
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    ts = _prepare_targets(targets, g.n, exact)

    if exact:
        float_ts = [float(t) for t in ts]
        seed_sets, seed_basis = _float_seed(
            lambda: _min_slack_engine(g, float_ts, False, 1e-10, pricing_budget)
        )
        state = _min_slack_engine(g, ts, True, 0.0, pricing_budget, seed_sets, seed_basis)
    else:
        state = _min_slack_engine(g, ts, False, tol, pricing_budget)

    y_star = state.master.objective()
    lam = state.lam
    lam_sum = sum(lam)
    dual_bound = (sum(l * t for l, t in zip(lam, ts)) - state.price_value) / lam_sum
    gap = y_star - dual_bound
    if not exact and gap < 0:
        gap = 0.0
    duals = tuple(l / lam_sum for l in lam)

    dist = make_distribution(_extract_support(state, exact))
    return LPResult(
        y_star=y_star, distribution=dist, duals=duals, gap=gap, iterations=state.rounds
    )


def chi_fractional(
    g: Graph,
    mode: str = "float",
    tol: float = 1e-9,
    pricing_budget: int = 5000,
) -> ChiFractional:
    """Fractional chromatic number: min sum x_I with every vertex covered once.

    The dual weights satisfy lambda >= 0 and lambda(I) <= 1 for every
    independent set (verified through the pricing oracle), so sum(lambda) is
    a fractional-clique lower bound; value - sum(lambda)/maxIS(lambda) is
    reported as ``gap`` (exactly 0 in exact mode).
    """
    _check_mode(mode)
    exact = mode == "exact"
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")

    if exact:
        seed_sets, seed_basis = _float_seed(
            lambda: _chi_engine(g, False, 1e-10, pricing_budget)
        )
        state = _chi_engine(g, True, 0.0, pricing_budget, seed_sets, seed_basis)
    else:
        state = _chi_engine(g, False, tol, pricing_budget)

    objective = state.master.objective()
    lam = state.lam
    value = state.price_value
    dual_bound = sum(lam) / value if value > 0 else sum(lam)
    gap = objective - dual_bound
    if not exact and gap < 0:
        gap = 0.0

    cover = [(IndepSet(verts), x) for verts, x in _extract_support(state, exact)]
    cover.sort(key=lambda t: t[0].vertices)
    return ChiFractional(
        value=objective,
        cover=tuple(cover),
        duals=tuple(lam),
        gap=gap,
        iterations=state.rounds,
    )


def lift_distribution(dist: Distribution, parent_ids) -> Distribution:
    """Rewrite a subgraph distribution in the parent graph's vertex ids."""
    table = list(parent_ids)
    return make_distribution(
        (tuple(table[v] for v in s.vertices), p) for s, p in dist.support
    )
