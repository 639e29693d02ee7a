"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they check: the LP oracle
enumerates every independent set instead of pricing, and the eigenvalue
oracle is a classical Jacobi sweep instead of power iteration.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from shearer.corpus import corpus, small_corpus
from shearer.graph import Graph
from shearer.indsets import enumerate_all_independent_sets
from shearer.simplex import RevisedSimplex


@pytest.fixture(scope="session")
def corpus_graphs() -> list[tuple[str, Graph]]:
    return corpus()


@pytest.fixture(scope="session")
def small_corpus_graphs() -> list[tuple[str, Graph]]:
    return small_corpus()


def dense_min_slack(g: Graph, targets, exact: bool = False):
    """Min-slack optimum over the explicitly enumerated full column set.

    Same simplex core as the production path, but with every independent set
    present from the start; no pricing is involved, so agreement with
    column generation checks the generation loop itself.
    """
    n = g.n
    one = Fraction(1) if exact else 1.0
    master = RevisedSimplex(list(targets) + [one], exact=exact)
    master.add_column(1, {r: 1 for r in range(n)})
    master.add_column(-1, {r: -1 for r in range(n)})
    for v in range(n):
        master.add_column(0, {v: -1})
    for s in enumerate_all_independent_sets(g):
        entries = {v: 1 for v in s.vertices}
        entries[n] = 1
        master.add_column(0, entries)
    master.solve()
    return master.objective()


def dense_chi_f(g: Graph, exact: bool = False):
    """Fractional chromatic number over the full enumerated column set."""
    n = g.n
    one = Fraction(1) if exact else 1.0
    master = RevisedSimplex([one] * n, exact=exact)
    for v in range(n):
        master.add_column(0, {v: -1})
    for s in enumerate_all_independent_sets(g):
        if s.vertices:
            master.add_column(1, {v: 1 for v in s.vertices})
    master.solve()
    return master.objective()


def brute_force_mwis(g: Graph, weights):
    """Max-weight independent set by exhaustive enumeration (n <= 20)."""
    best = None
    for s in enumerate_all_independent_sets(g):
        w = sum(weights[v] for v in s.vertices)
        if best is None or w > best[0]:
            best = (w, s.vertices)
    return best


def jacobi_eigenvalues(matrix: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotation sweeps."""
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0]])
    for _ in range(max_sweeps):
        if np.sqrt(np.sum(np.tril(a, -1) ** 2)) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) < 1e-18:
                    continue
                theta = 0.5 * np.arctan2(2.0 * a[p, q], a[q, q] - a[p, p])
                c, s = np.cos(theta), np.sin(theta)
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
    return np.sort(np.diag(a))


def jacobi_spectral_radius(g: Graph) -> float:
    adj = np.zeros((g.n, g.n))
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = 1.0
    eig = jacobi_eigenvalues(adj)
    return float(np.max(np.abs(eig)))
