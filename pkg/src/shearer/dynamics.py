"""Executable form of the weighted proof machinery: tilt, mix, claim.

The existence proof behind the weighted certificates runs a two-stage random
process: with probability 1-eps draw from a distribution on the whole graph,
otherwise pick a vertex u by weight and adjoin it to an independent set of
the graph with u's closed neighborhood removed. This module builds that
mixture exactly, decomposes its per-vertex marginals into the three
contributing terms, and evaluates both sides of the tilt-ratio inequality
('claim') that drives the argument, so each algebraic step can be checked
numerically on concrete graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, IsolatedVertex, NotNormalized, NotTriangleFree, SupportNotIndependent
from .graph import Graph, is_triangle_free, remove_closed_neighborhood
from .jsonutil import num_json
from .lp import Distribution, lift_distribution, make_distribution, marginals, solve_min_slack
from .shearer_fn import f_rational_floor, shearer_f, shearer_f_prime
from .weights import WeightFn


@dataclass(frozen=True)
class MixReport:
    """Per-vertex audit of one mixing step.

    decomposition: marginal(v) = main + self_pick + sub, where
      main      = (1-eps) * P_main[v]
      self_pick = eps * w(v)
      sub       = eps * sum over x outside the closed neighborhood of v
                  of P_sub[x][v] * w(x)
    identity_residual is marginal - (main + self_pick + sub): zero exactly in
    rational mode. ode_cancellation is eps*w(v)*(1 + x(1-x)f'(x) - (1+x)f(x))
    at x = w(N(v))/w(v); the differential equation makes it vanish.
    claim_lhs/claim_rhs are None for isolated vertices.
    """

    eps: object
    marginal: tuple
    term_main: tuple
    term_self: tuple
    term_sub: tuple
    identity_residual: tuple
    ode_cancellation: tuple[float, ...]
    claim_lhs: tuple
    claim_rhs: tuple

    def to_jsonable(self) -> dict:
        return {
            "eps": num_json(self.eps),
            "per_vertex": [
                {
                    "v": v,
                    "marginal": num_json(self.marginal[v]),
                    "term_main": num_json(self.term_main[v]),
                    "term_self": num_json(self.term_self[v]),
                    "term_sub": num_json(self.term_sub[v]),
                    "identity_residual": num_json(self.identity_residual[v]),
                    "ode_cancellation": num_json(self.ode_cancellation[v]),
                    "claim_lhs": num_json(self.claim_lhs[v]),
                    "claim_rhs": num_json(self.claim_rhs[v]),
                }
                for v in range(len(self.marginal))
            ],
        }


def _require_normalized(w: WeightFn):
    if not w.is_normalized:
        raise NotNormalized("weight function must be normalized to total 1")


def tilt_weights(g: Graph, w: WeightFn, eps: float) -> WeightFn:
    """The modified weighting w'(v) = w(v) * exp(eps * w(N(v))).

    Not renormalized: the certificate targets depend only on weight ratios.
    """
    _require_normalized(w)
    if not 0 < eps < 1:
        raise DomainError(f"eps must lie in (0, 1), got {eps}")
    return WeightFn(
        tuple(
            float(w[v]) * math.exp(float(eps) * float(w.of(g.neighbors(v))))
            for v in range(g.n)
        )
    )


def _claim_sides(g: Graph, w: WeightFn, eps: float, v: int):
    """Both sides of the tilt-ratio inequality at vertex v (floats)."""
    wf = [float(x) for x in w.values]
    eps = float(eps)
    tilt = [wf[u] * math.exp(eps * sum(wf[t] for t in g.neighbors(u))) for u in range(g.n)]
    nbrs = g.neighbor_set(v)
    closed_v = g.closed_neighborhood(v)
    w_nv = sum(wf[u] for u in nbrs)

    numerator = (1.0 - eps) * sum(tilt[y] for y in nbrs)
    for x in range(g.n):
        if x in closed_v:
            continue
        closed_x = g.closed_neighborhood(x)
        surviving = sum(tilt[y] for y in nbrs if y not in closed_x)
        numerator += eps * wf[x] * surviving
    denominator = tilt[v] * (1.0 - eps * sum(wf[u] for u in closed_v))
    lhs = numerator / denominator
    rhs = (w_nv / wf[v]) * math.exp(eps * (wf[v] - w_nv))
    return lhs, rhs


def claim_check(g: Graph, w: WeightFn, eps: float, v: int) -> tuple[float, float]:
    """Evaluate (lhs, rhs) of the claim inequality at v; lhs <= rhs holds on
    triangle-free graphs because distinct neighbors of v have disjoint
    neighborhoods there."""
    if not is_triangle_free(g):
        raise NotTriangleFree("claim inequality assumes a triangle-free graph")
    _require_normalized(w)
    if not 0 < eps < 1:
        raise DomainError(f"eps must lie in (0, 1), got {eps}")
    if g.degree(v) == 0:
        raise IsolatedVertex(f"vertex {v} has no neighbors; the ratio is undefined")
    return _claim_sides(g, w, eps, v)


def taylor_bound_check(z: float) -> bool:
    """exp(z) <= 1 + z + 2 z^2 on [-1, 1] (with float-roundoff slack)."""
    if not -1.0 <= z <= 1.0:
        raise DomainError(f"z must lie in [-1, 1], got {z}")
    return math.exp(z) <= 1.0 + z + 2.0 * z * z + 1e-15


def _ode_cancellation(w: WeightFn, g: Graph, eps, v: int) -> float:
    wv = float(w[v])
    x = float(w.of(g.neighbors(v))) / wv
    if x == 0.0:
        return float(eps) * wv * (1.0 - shearer_f(0.0))
    value = 1.0 + x * (1.0 - x) * shearer_f_prime(x) - (1.0 + x) * shearer_f(x)
    return float(eps) * wv * value


def mix_process(
    g: Graph,
    w: WeightFn,
    eps,
    d_main: Distribution,
    d_sub: dict[int, Distribution],
) -> tuple[Distribution, MixReport]:
    """Run one mixing step exactly and audit its marginal decomposition.

    d_sub[u] must be supported on independent sets avoiding the closed
    neighborhood of u (its sets are written in this graph's vertex ids).
    With rational w, eps and probabilities, every reported quantity except
    the f-based ode_cancellation is exact.
    """
    _require_normalized(w)
    if not 0 <= eps <= 1:
        raise DomainError(f"eps must lie in [0, 1], got {eps}")
    n = g.n
    if eps > 0:
        missing = [u for u in range(n) if u not in d_sub]
        if missing:
            raise ValueError(f"d_sub missing distributions for vertices {missing}")
        for u, dist in d_sub.items():
            closed = g.closed_neighborhood(u)
            for s, _ in dist.support:
                if closed & set(s.vertices):
                    raise SupportNotIndependent(
                        f"d_sub[{u}] support touches the closed neighborhood of {u}"
                    )
                vs = set(s.vertices)
                if any(g.neighbor_set(a) & vs for a in vs):
                    raise SupportNotIndependent(f"d_sub[{u}] support set {s.vertices} is not independent")

    one = Fraction(1) if isinstance(eps, (Fraction, int)) else 1.0
    pieces = [(s.vertices, (one - eps) * p) for s, p in d_main.support]
    if eps > 0:
        for u in range(n):
            wu = w[u]
            for s, p in d_sub[u].support:
                pieces.append((s.vertices + (u,), eps * wu * p))
    mixture = make_distribution(pieces)

    marg = marginals(mixture, n)
    main_marg = marginals(d_main, n)
    sub_margs = {u: marginals(d_sub[u], n) for u in d_sub} if eps > 0 else {}

    term_main, term_self, term_sub, residual = [], [], [], []
    claim_lhs, claim_rhs = [], []
    ode = []
    for v in range(n):
        a = (one - eps) * main_marg[v]
        b = eps * w[v]
        closed_v = g.closed_neighborhood(v)
        c = 0
        if eps > 0:
            for x in range(n):
                if x not in closed_v:
                    c = c + eps * w[x] * sub_margs[x][v]
        term_main.append(a)
        term_self.append(b)
        term_sub.append(c)
        residual.append(marg[v] - (a + b + c))
        ode.append(_ode_cancellation(w, g, eps, v))
        if g.degree(v) > 0 and 0 < eps < 1:
            lhs, rhs = _claim_sides(g, w, eps, v)
            claim_lhs.append(lhs)
            claim_rhs.append(rhs)
        else:
            claim_lhs.append(None)
            claim_rhs.append(None)

    report = MixReport(
        eps=eps,
        marginal=tuple(marg),
        term_main=tuple(term_main),
        term_self=tuple(term_self),
        term_sub=tuple(term_sub),
        identity_residual=tuple(residual),
        ode_cancellation=tuple(ode),
        claim_lhs=tuple(claim_lhs),
        claim_rhs=tuple(claim_rhs),
    )
    return mixture, report


def lp_witness_inputs(
    g: Graph,
    w: WeightFn,
    eps,
    mode: str = "float",
    tol: float = 1e-9,
) -> tuple[Distribution, dict[int, Distribution]]:
    """LP-optimal inputs for mix_process under the tilted weighting.

    d_main meets the tilted targets on g; each d_sub[u] meets the tilted
    targets on g minus the closed neighborhood of u (returned in g's vertex
    ids). In exact mode the targets are certified rational floors of the f
    values, so all probabilities come out rational.
    """

    def targets_for(h: Graph, tilted_local):
        ratios = [
            float(tilted_local.of(h.neighbors(v))) / float(tilted_local[v])
            for v in range(h.n)
        ]
        if mode == "exact":
            return [f_rational_floor(r) for r in ratios]
        return [shearer_f(r) for r in ratios]

    tilted = tilt_weights(g, w, float(eps))
    d_main = solve_min_slack(g, targets_for(g, tilted), mode=mode, tol=tol).distribution

    d_sub: dict[int, Distribution] = {}
    for u in range(g.n):
        h = remove_closed_neighborhood(g, u)
        if h.n == 0:
            d_sub[u] = make_distribution([((), Fraction(1) if mode == "exact" else 1.0)])
            continue
        local_w = WeightFn(tuple(tilted[p] for p in h.parent_ids))
        result = solve_min_slack(h, targets_for(h, local_w), mode=mode, tol=tol)
        d_sub[u] = lift_distribution(result.distribution, h.parent_ids)
    return d_main, d_sub
