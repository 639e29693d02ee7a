"""Generator correctness: structure, triangle-freeness, determinism."""

import networkx as nx
import pytest

from shearer.errors import InvalidSpec
from shearer.generators import (
    complete_bipartite,
    cycle,
    generate,
    grotzsch,
    kneser,
    mycielski,
    petersen,
    random_bipartite,
    triangle_free_process,
)
from shearer.graph import Graph, is_connected, is_triangle_free


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestBasicGenerators:
    def test_cycle(self):
        g = cycle(5)
        assert (g.n, g.m) == (5, 5)
        assert all(d == 2 for d in g.degrees())

    def test_cycle_too_small(self):
        with pytest.raises(InvalidSpec):
            cycle(2)

    def test_complete_bipartite(self):
        g = complete_bipartite(2, 3)
        assert (g.n, g.m) == (5, 6)
        assert is_triangle_free(g)
        assert nx.is_bipartite(to_nx(g))

    def test_petersen_structure(self):
        g = petersen()
        assert (g.n, g.m) == (10, 15)
        assert all(d == 3 for d in g.degrees())
        assert is_triangle_free(g)
        # girth 5
        assert nx.girth(to_nx(g)) == 5


class TestKneser:
    def test_petersen_isomorphic(self):
        assert nx.is_isomorphic(to_nx(kneser(5, 2)), to_nx(petersen()))

    def test_7_3_shape(self):
        g = kneser(7, 3)
        assert g.n == 35
        assert all(d == 4 for d in g.degrees())
        assert is_triangle_free(g)

    def test_rejects_triangle_admitting_parameters(self):
        with pytest.raises(InvalidSpec):
            kneser(6, 2)  # 6 >= 3*2 admits triangles

    def test_sparse_case_edgeless(self):
        g = kneser(3, 2)  # no two disjoint 2-subsets of a 3-set
        assert g.m == 0


class TestMycielski:
    def test_grotzsch_shape(self):
        g = grotzsch()
        assert (g.n, g.m) == (11, 20)
        assert is_triangle_free(g)

    def test_counts(self):
        base = cycle(7)
        g = mycielski(base)
        assert g.n == 2 * base.n + 1
        assert g.m == 3 * base.m + base.n

    def test_matches_networkx(self):
        ours = mycielski(cycle(5))
        theirs = nx.mycielskian(nx.cycle_graph(5))
        assert nx.is_isomorphic(to_nx(ours), theirs)

    def test_preserves_triangle_freeness(self):
        assert is_triangle_free(mycielski(grotzsch()))


class TestTriangleFreeProcess:
    def test_deterministic(self):
        a = triangle_free_process(20, 7)
        b = triangle_free_process(20, 7)
        assert a == b

    def test_seed_sensitivity(self):
        assert triangle_free_process(20, 7) != triangle_free_process(20, 8)

    def test_triangle_free_and_maximal(self):
        g = triangle_free_process(18, 3)
        assert is_triangle_free(g)
        # maximality: every missing edge closes a triangle
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not g.has_edge(u, v):
                    assert g.neighbor_set(u) & g.neighbor_set(v), (u, v)

    def test_connected(self):
        assert is_connected(triangle_free_process(25, 11))


class TestRandomBipartite:
    def test_triangle_free_and_seeded(self):
        g = random_bipartite(6, 7, 0.5, 13)
        assert is_triangle_free(g)
        assert nx.is_bipartite(to_nx(g))
        assert g == random_bipartite(6, 7, 0.5, 13)

    def test_p_one_is_complete(self):
        g = random_bipartite(3, 4, 1.0, 1)
        assert g.m == 12


class TestGenerateDispatch:
    def test_kinds(self):
        assert generate("cycle", n=5) == cycle(5)
        assert generate("petersen") == petersen()
        assert generate("kneser", n=5, k=2) == kneser(5, 2)
        assert generate("tfp", n=10, seed=1) == triangle_free_process(10, 1)
        assert generate("mycielski", base=cycle(5)) == grotzsch()

    def test_unknown_kind(self):
        with pytest.raises(InvalidSpec):
            generate("hypercube", n=3)

    def test_missing_parameter(self):
        with pytest.raises(InvalidSpec):
            generate("cycle")

    def test_guaranteed_triangle_free(self):
        specs = [
            generate("cycle", n=6),
            generate("kneser", n=7, k=3),
            generate("tfp", n=12, seed=5),
            generate("bipartite", a=4, b=4, p=0.7, seed=2),
            generate("complete_bipartite", a=3, b=5),
            generate("mycielski", base=cycle(5)),
        ]
        for g in specs:
            assert is_triangle_free(g)
