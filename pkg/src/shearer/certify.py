"""Certificates for the non-asymptotic coloring inequalities.

Each certifier turns one exact inequality into a per-vertex (target,
achieved) table backed by an LP witness distribution, and an overall
pass/fail verdict at an explicit tolerance. Certifiers refuse graphs that
violate a theorem's hypothesis (a triangle, say) instead of reporting a
vacuous failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import Disconnected, IsolatedVertex, NotTriangleFree
from .graph import Graph, graph_hash, induced_subgraph, is_connected, is_triangle_free, peel_order, stats
from .jsonutil import num_json
from .lp import Distribution, LPResult, chi_fractional, make_distribution, marginals, solve_min_slack
from .shearer_fn import shearer_f
from .spectral import spectral_radius
from .weights import WeightFn, unit_weights

DEFAULT_TOLERANCE = 1e-8
CHI_SPECTRAL_TOLERANCE = 1e-6

WEIGHTED_LOCAL = "weighted_local"
LOCAL_SHEARER = "local_shearer"
SPECTRAL = "spectral"
EDGE_MIXTURE = "edge_mixture"
DCORE_REDUCTION = "dcore_reduction"


@dataclass(frozen=True)
class Certificate:
    """Per-vertex verdict for one theorem on one graph."""

    theorem: str
    n: int
    m: int
    graph_hash: str
    tolerance: float
    per_vertex: tuple[tuple[int, object, object], ...]  # (vertex, target, achieved)
    worst_slack: object
    passed: bool
    witness: LPResult | None = None
    info: dict = field(default_factory=dict)

    def to_jsonable(self) -> dict:
        return {
            "theorem": self.theorem,
            "graph_hash": self.graph_hash,
            "n": self.n,
            "m": self.m,
            "tolerance": self.tolerance,
            "per_vertex": [
                {"v": v, "target": num_json(t), "achieved": num_json(a)}
                for v, t, a in self.per_vertex
            ],
            "worst_slack": num_json(self.worst_slack),
            "pass": self.passed,
            "witness": self.witness.to_jsonable() if self.witness is not None else None,
            "info": _jsonify(self.info),
        }


def _jsonify(obj):
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    if isinstance(obj, (int, float, Fraction)) or obj is None:
        return num_json(obj)
    return obj


def _require_triangle_free(g: Graph):
    if not is_triangle_free(g):
        raise NotTriangleFree("graph contains a triangle; the theorem's hypothesis fails")


def weighted_targets(g: Graph, w: WeightFn) -> list[float]:
    """Per-vertex targets f(w(N(v)) / w(v)); isolated vertices get f(0) = 1."""
    if w.n != g.n:
        raise ValueError(f"weight function has {w.n} entries for a graph on {g.n} vertices")
    return [
        shearer_f(float(w.of(g.neighbors(v))) / float(w[v]))
        for v in range(g.n)
    ]


def _slack_certificate(theorem, g, targets, result, tol, info=None) -> Certificate:
    achieved = marginals(result.distribution, g.n)
    per_vertex = tuple((v, targets[v], achieved[v]) for v in range(g.n))
    worst = min((a - t for _, t, a in per_vertex), default=0.0)
    return Certificate(
        theorem=theorem,
        n=g.n,
        m=g.m,
        graph_hash=graph_hash(g),
        tolerance=tol,
        per_vertex=per_vertex,
        worst_slack=worst,
        passed=bool(worst >= -tol),
        witness=result,
        info=info or {},
    )


def verify_weighted_theorem(
    g: Graph,
    w: WeightFn,
    mode: str = "float",
    tol: float = DEFAULT_TOLERANCE,
    rational_targets=None,
) -> Certificate:
    """Certify that some distribution meets every target f(w(N(v))/w(v)).

    Exact mode needs rational stand-in targets from the caller (f itself is
    transcendental); they should be lower bounds on the true targets, e.g.
    from shearer_fn.f_rational_floor.
    """
    _require_triangle_free(g)
    if mode == "exact":
        if rational_targets is None:
            raise ValueError("exact mode requires caller-supplied rational targets")
        targets = list(rational_targets)
    else:
        targets = weighted_targets(g, w)
    result = solve_min_slack(g, targets, mode=mode)
    return _slack_certificate(WEIGHTED_LOCAL, g, targets, result, tol)


def verify_local_shearer(g: Graph, mode: str = "float", tol: float = DEFAULT_TOLERANCE) -> Certificate:
    """The unit-weight case: targets f(d(v)) per vertex."""
    cert = verify_weighted_theorem(g, unit_weights(g.n), mode=mode, tol=tol)
    return replace(cert, theorem=LOCAL_SHEARER)


def verify_spectral_bound(
    g: Graph,
    mode: str = "float",
    tol: float = DEFAULT_TOLERANCE,
    chi_tol: float = CHI_SPECTRAL_TOLERANCE,
) -> Certificate:
    """Certify chi_f(G) <= 1/f(rho(G)) through the Perron-weighted targets.

    Runs the weighted certificate with the Perron vector as weights, checks
    that every weighted target equals f(rho) up to the eigen-residual, and
    compares the fractional chromatic number against 1/f(rho) directly.
    The graph must be connected (decompose first; both chi_f and rho are
    maxima over components).
    """
    _require_triangle_free(g)
    if not is_connected(g):
        raise Disconnected("spectral certificate needs a connected graph")
    sr = spectral_radius(g)
    w = WeightFn(sr.perron)
    cert = verify_weighted_theorem(g, w, mode="float", tol=tol)

    f_rho = shearer_f(sr.rho)
    if g.m > 0:
        u_min = min(sr.perron)
        eigen_tol = 0.7 * sr.residual / u_min + 1e-12
        eigen_dev = max(abs(t - f_rho) for _, t, _ in cert.per_vertex)
    else:
        eigen_tol = 1e-12
        eigen_dev = abs(cert.per_vertex[0][1] - f_rho) if cert.per_vertex else 0.0
    eigen_ok = eigen_dev <= eigen_tol

    chi = chi_fractional(g, mode=mode if mode == "exact" else "float")
    bound = 1.0 / f_rho
    chi_ok = float(chi.value) <= bound + chi_tol

    info = {
        "rho": sr.rho,
        "eigen_residual": sr.residual,
        "spectral_bound": bound,
        "chi_f": chi.value,
        "chi_f_gap": chi.gap,
        "eigen_target_deviation": eigen_dev,
        "eigen_target_tolerance": eigen_tol,
    }
    return Certificate(
        theorem=SPECTRAL,
        n=g.n,
        m=g.m,
        graph_hash=cert.graph_hash,
        tolerance=tol,
        per_vertex=cert.per_vertex,
        worst_slack=cert.worst_slack,
        passed=bool(cert.passed and eigen_ok and chi_ok),
        witness=cert.witness,
        info=info,
    )


def neighborhood_sampler(g: Graph) -> Distribution:
    """The distribution that picks u with probability d(u)/2m and returns N(u).

    Exact by construction; in a triangle-free graph every neighborhood is an
    independent set. Marginal of v is S(v)/2m.
    """
    if g.m == 0:
        raise IsolatedVertex("neighborhood sampler needs at least one edge")
    two_m = 2 * g.m
    return make_distribution(
        (g.neighbors(u), Fraction(g.degree(u), two_m)) for u in range(g.n) if g.degree(u) > 0
    )


def edge_bound_mixture(g: Graph, mode: str = "float", tol: float = DEFAULT_TOLERANCE) -> Certificate:
    """Certify the three-way mixture bound on per-vertex marginals.

    Mixes, with weight 1/3 each: the witness for unit weights, the witness
    for degree weights, and the exact neighborhood sampler. Verifies
    marginal(v) >= (f(d(v)) + f(S(v)/d(v)) + S(v)/2m) / 3 per vertex.
    Contains no sampling; all three components are explicit distributions.
    """
    _require_triangle_free(g)
    if mode != "float":
        raise ValueError("edge_bound_mixture targets involve f and run in float mode only")
    st = stats(g)
    if any(d == 0 for d in st.degrees):
        raise IsolatedVertex("mixture bound assumes no isolated vertices; strip them first")

    t1 = [shearer_f(d) for d in st.degrees]
    t2 = [shearer_f(st.neighbor_degree_sums[v] / st.degrees[v]) for v in range(g.n)]
    r1 = solve_min_slack(g, t1, mode="float")
    r2 = solve_min_slack(g, t2, mode="float")
    d3 = neighborhood_sampler(g)

    third = 1.0 / 3.0
    pieces = []
    for dist in (r1.distribution, r2.distribution, d3):
        pieces.extend((s.vertices, third * float(p)) for s, p in dist.support)
    mixture = make_distribution(pieces)
    achieved = marginals(mixture, g.n)

    two_m = 2.0 * g.m
    targets = [
        third * (t1[v] + t2[v] + st.neighbor_degree_sums[v] / two_m)
        for v in range(g.n)
    ]
    per_vertex = tuple((v, targets[v], achieved[v]) for v in range(g.n))
    worst = min(a - t for _, t, a in per_vertex)
    context_bound = (
        math.log(g.m) ** (2.0 / 3.0) / (18.0 * g.m) ** (1.0 / 3.0) if g.m >= 2 else None
    )
    info = {
        "mixture_support": mixture.to_jsonable(),
        "unit_witness_y_star": r1.y_star,
        "degree_witness_y_star": r2.y_star,
        "asymptotic_marginal_bound": context_bound,  # reported, never asserted
    }
    return Certificate(
        theorem=EDGE_MIXTURE,
        n=g.n,
        m=g.m,
        graph_hash=graph_hash(g),
        tolerance=tol,
        per_vertex=per_vertex,
        worst_slack=worst,
        passed=bool(worst >= -tol),
        witness=None,
        info=info,
    )


def _chi_value(g: Graph | None, mode: str):
    if g is None or g.n == 0:
        return Fraction(0) if mode == "exact" else 0.0
    return chi_fractional(g, mode=mode).value


def dcore_reduction_check(g: Graph, d: int, mode: str = "float", tol: float = CHI_SPECTRAL_TOLERANCE) -> Certificate:
    """Replay the peeling to the d-core, checking the reduction inequality.

    At every peeled vertex v: chi_f(H) <= max(chi_f(H - v), deg_H(v) + 1),
    with chi_f(empty) = 0; the chain yields chi_f(G) <= max(chi_f(core), d+1).
    """
    order = peel_order(g, d)
    remaining = [v for v in range(g.n)]
    graphs = [g]
    for v, _ in order:
        remaining.remove(v)
        graphs.append(induced_subgraph(g, remaining))
    chis = [_chi_value(h, mode) for h in graphs]

    per_vertex = []
    for i, (v, deg) in enumerate(order):
        bound = max(chis[i + 1], deg + 1)
        per_vertex.append((v, chis[i], bound))
    core_chi = chis[-1]
    overall_bound = max(core_chi, d + 1)
    slacks = [float(b) - float(t) for _, t, b in per_vertex]
    slacks.append(float(overall_bound) - float(chis[0]))
    worst = min(slacks)
    info = {
        "d": d,
        "chi_f": chis[0],
        "core_n": graphs[-1].n,
        "core_chi_f": core_chi,
        "overall_bound": overall_bound,
        "peeled": [v for v, _ in order],
    }
    return Certificate(
        theorem=DCORE_REDUCTION,
        n=g.n,
        m=g.m,
        graph_hash=graph_hash(g),
        tolerance=tol,
        per_vertex=tuple(per_vertex),
        worst_slack=worst,
        passed=bool(worst >= -tol),
        witness=None,
        info=info,
    )


def bound_report(g: Graph) -> dict:
    """All upper-bound formulas side by side for one triangle-free graph.

    The vertex- and edge-count bounds are asymptotic and merely reported;
    ``holds_here`` records whether each formula happens to dominate chi_f at
    this size. Nothing in this report is a pass/fail assertion.
    """
    _require_triangle_free(g)
    chi = chi_fractional(g, mode="exact")
    chi_val = float(chi.value)
    from .spectral import spectral_of

    rho = spectral_of(g)
    n, m = g.n, g.m
    delta = g.max_degree()
    bounds = {
        "vertex_count": math.sqrt(2.0 * n / math.log(n)) if n >= 2 else None,
        "edge_count": (18.0 * m) ** (1.0 / 3.0) * math.log(m) ** (-2.0 / 3.0) if m >= 2 else None,
        "spectral": 1.0 / shearer_f(rho),
        "wilf": rho + 1.0,
        "max_degree": 1.0 / shearer_f(delta),
    }
    holds = {
        name: (None if val is None else bool(val >= chi_val - 1e-9))
        for name, val in bounds.items()
    }
    valid = [(v, k) for k, v in bounds.items() if v is not None and holds[k]]
    return {
        "n": n,
        "m": m,
        "graph_hash": graph_hash(g),
        "chi_f": chi.value,
        "chi_f_float": chi_val,
        "rho": rho,
        "max_degree": delta,
        "bounds": bounds,
        "holds_here": holds,
        "tightest_valid": min(valid)[1] if valid else None,
    }
