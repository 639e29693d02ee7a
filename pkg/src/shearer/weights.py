"""Strictly positive per-vertex weight functions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph


@dataclass(frozen=True)
class WeightFn:
    """Per-vertex weights, all strictly positive; floats or exact rationals."""

    values: tuple

    def __post_init__(self):
        if any(v <= 0 for v in self.values):
            raise ValueError("weights must be strictly positive")
        object.__setattr__(self, "values", tuple(self.values))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def exact(self) -> bool:
        return all(isinstance(v, (Fraction, int)) for v in self.values)

    def total(self):
        return sum(self.values)

    @property
    def is_normalized(self) -> bool:
        t = self.total()
        if self.exact:
            return t == 1
        return abs(t - 1.0) <= 1e-12

    def of(self, vertices):
        """Total weight of a vertex set (0 for the empty set)."""
        return sum((self.values[v] for v in vertices), start=0)

    def normalize(self) -> "WeightFn":
        t = self.total()
        if self.exact:
            return WeightFn(tuple(Fraction(v) / t for v in self.values))
        return WeightFn(tuple(float(v) / t for v in self.values))

    def __getitem__(self, v: int):
        return self.values[v]


def unit_weights(n: int) -> WeightFn:
    return WeightFn((1,) * n)


def degree_weights(g: Graph) -> WeightFn:
    """w(v) = d(v); requires no isolated vertices (weights must stay positive)."""
    degs = g.degrees()
    if any(d == 0 for d in degs):
        raise ValueError("degree weights need a graph without isolated vertices")
    return WeightFn(degs)


def random_weights(n: int, rng: random.Random, lo: float = 1e-3, hi: float = 1e3) -> WeightFn:
    """Log-uniform weights in [lo, hi], driven by the supplied RNG."""
    import math

    lg_lo, lg_hi = math.log(lo), math.log(hi)
    return WeightFn(tuple(math.exp(rng.uniform(lg_lo, lg_hi)) for _ in range(n)))


def random_rational_weights(n: int, rng: random.Random, max_num: int = 99) -> WeightFn:
    """Small random positive rationals, for exact-arithmetic runs."""
    return WeightFn(
        tuple(Fraction(rng.randint(1, max_num), rng.randint(1, max_num)) for _ in range(n))
    )
