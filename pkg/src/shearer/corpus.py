"""The built-in verification corpus of triangle-free graphs."""

from __future__ import annotations

from .graph import Graph
from .generators import cycle, grotzsch, kneser, petersen, triangle_free_process

DEFAULT_SEED = 101


def corpus(seed: int = DEFAULT_SEED) -> list[tuple[str, Graph]]:
    """Cycles C4..C12, Petersen, Grotzsch, Kneser(7,3), and two seeded
    triangle-free-process graphs (n = 20 and 30)."""
    entries: list[tuple[str, Graph]] = []
    for n in range(4, 13):
        entries.append((f"C{n}", cycle(n)))
    entries.append(("petersen", petersen()))
    entries.append(("grotzsch", grotzsch()))
    entries.append(("kneser_7_3", kneser(7, 3)))
    entries.append(("tfp_20", triangle_free_process(20, seed + 20)))
    entries.append(("tfp_30", triangle_free_process(30, seed + 30)))
    return entries


def small_corpus(seed: int = DEFAULT_SEED, max_n: int = 12) -> list[tuple[str, Graph]]:
    """Corpus members small enough for exhaustive independent-set enumeration."""
    return [(name, g) for name, g in corpus(seed) if g.n <= max_n]
