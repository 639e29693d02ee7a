"""Column generation against dense-enumeration oracles and known optima."""

import json
import random
from fractions import Fraction

import pytest

from conftest import dense_chi_f, dense_min_slack
from shearer.generators import cycle, grotzsch, kneser, petersen
from shearer.graph import build_graph, components, d_core
from shearer.indsets import IndepSet, is_independent
from shearer.lp import (
    chi_fractional,
    expected_size,
    lift_distribution,
    make_distribution,
    marginals,
    solve_min_slack,
)
from shearer.shearer_fn import shearer_f

F2 = shearer_f(2)


class TestMarginals:
    def test_uniform_on_k2_singletons(self):
        d = make_distribution([((0,), 0.5), ((1,), 0.5)])
        assert marginals(d, 2) == [0.5, 0.5]

    def test_uniform_on_c5_maximals(self):
        d = make_distribution([((0, 2), 0.2), ((0, 3), 0.2), ((1, 3), 0.2), ((1, 4), 0.2), ((2, 4), 0.2)])
        assert marginals(d, 5) == pytest.approx([0.4] * 5)

    def test_point_mass_on_empty(self):
        d = make_distribution([((), 1.0)])
        assert marginals(d, 3) == [0, 0, 0]

    def test_sum_is_expected_size(self):
        d = make_distribution([((0, 2), Fraction(1, 3)), ((1,), Fraction(2, 3))])
        assert sum(marginals(d, 4)) == expected_size(d) == Fraction(4, 3)

    def test_duplicates_merge(self):
        d = make_distribution([((1, 0), 0.25), ((0, 1), 0.25), ((2,), 0.5)])
        assert len(d.support) == 2
        assert d.total_probability() == pytest.approx(1.0)


class TestMinSlack:
    def test_k2_half_targets(self):
        r = solve_min_slack(build_graph(2, [(0, 1)]), [0.5, 0.5])
        assert r.y_star == pytest.approx(0.0, abs=1e-10)
        got = {s.vertices: p for s, p in r.distribution.support}
        assert got == {(0,): pytest.approx(0.5), (1,): pytest.approx(0.5)}

    def test_c5_045(self):
        r = solve_min_slack(cycle(5), [0.45] * 5)
        assert r.y_star == pytest.approx(0.05, abs=1e-10)

    def test_c5_f2_targets(self):
        r = solve_min_slack(cycle(5), [F2] * 5)
        assert r.y_star == pytest.approx(F2 - 0.4, abs=1e-10)
        assert r.y_star == pytest.approx(-0.0137056, abs=1e-7)

    def test_single_vertex_base_case(self):
        r = solve_min_slack(build_graph(1, []), [0.75])
        assert r.y_star == pytest.approx(-0.25)
        assert [s.vertices for s, _ in r.distribution.support] == [(0,)]

    def test_exact_mode_rational(self):
        r = solve_min_slack(cycle(5), [Fraction(2, 5)] * 5, mode="exact")
        assert r.y_star == 0
        assert r.gap == 0
        assert all(isinstance(p, Fraction) for _, p in r.distribution.support)
        assert sum(p for _, p in r.distribution.support) == 1

    def test_exact_mode_rejects_floats(self):
        with pytest.raises(ValueError):
            solve_min_slack(cycle(5), [0.4] * 5, mode="exact")

    def test_rejects_bad_targets(self):
        with pytest.raises(ValueError):
            solve_min_slack(cycle(5), [1.5] * 5)
        with pytest.raises(ValueError):
            solve_min_slack(cycle(5), [0.4] * 4)

    def test_duals_normalized_and_feasible(self):
        r = solve_min_slack(petersen(), [shearer_f(3)] * 10)
        assert sum(r.duals) == pytest.approx(1.0, abs=1e-12)
        assert all(l >= 0 for l in r.duals)
        assert r.gap <= 1e-8

    def test_distribution_is_valid(self, corpus_graphs):
        for name, g in corpus_graphs:
            targets = [shearer_f(d) for d in g.degrees()]
            r = solve_min_slack(g, targets)
            total = r.distribution.total_probability()
            assert total == pytest.approx(1.0, abs=1e-12), name
            assert len(r.distribution.support) <= g.n + 2, name
            for s, p in r.distribution.support:
                assert p >= 0
                assert is_independent(g, s.vertices), name


class TestChiFractional:
    @pytest.mark.parametrize(
        "graph,expected",
        [
            (cycle(5), Fraction(5, 2)),
            (cycle(4), Fraction(2)),
            (cycle(7), Fraction(7, 3)),
            (petersen(), Fraction(5, 2)),
            (grotzsch(), Fraction(29, 10)),
        ],
    )
    def test_exact_values(self, graph, expected):
        r = chi_fractional(graph, mode="exact")
        assert r.value == expected
        assert r.gap == 0

    def test_float_mode(self):
        r = chi_fractional(cycle(5))
        assert r.value == pytest.approx(2.5, abs=1e-9)
        assert r.gap <= 1e-8

    def test_dual_certificate(self):
        r = chi_fractional(petersen(), mode="exact")
        assert sum(r.duals) == r.value
        from shearer.indsets import max_weight_independent_set

        _, best = max_weight_independent_set(petersen(), r.duals)
        assert best <= 1

    def test_cover_covers(self):
        r = chi_fractional(cycle(7), mode="exact")
        cover_marginals = [Fraction(0)] * 7
        for s, x in r.cover:
            for v in s.vertices:
                cover_marginals[v] += x
        assert all(c >= 1 for c in cover_marginals)

    def test_edgeless_is_one(self):
        r = chi_fractional(build_graph(4, []), mode="exact")
        assert r.value == 1

    def test_component_decomposition(self):
        g = build_graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (7, 5)])
        whole = chi_fractional(g, mode="exact").value
        parts = [chi_fractional(c, mode="exact").value for c in components(g)]
        assert whole == max(parts) == 3  # the triangle 5-6-7 dominates

    def test_monotone_under_dcore(self, corpus_graphs):
        for name, g in corpus_graphs:
            if g.n > 20:
                continue
            core = d_core(g, 3)
            if core.n == 0:
                continue
            assert float(chi_fractional(core).value) <= float(chi_fractional(g).value) + 1e-9, name


class TestOracleEquivalence:
    def test_min_slack_matches_dense(self, small_corpus_graphs):
        rng = random.Random("dense-oracle")
        for name, g in small_corpus_graphs:
            targets = [rng.uniform(0.1, 0.9) for _ in range(g.n)]
            cg = solve_min_slack(g, targets)
            dense = dense_min_slack(g, targets)
            assert cg.y_star == pytest.approx(dense, abs=1e-9), name

    def test_chi_matches_dense_exact(self, small_corpus_graphs):
        for name, g in small_corpus_graphs:
            cg = chi_fractional(g, mode="exact")
            dense = dense_chi_f(g, exact=True)
            assert cg.value == dense, name


class TestScaleConsistency:
    def test_bisection_agrees_with_chi(self):
        for g in [cycle(5), petersen(), cycle(8)]:
            lo, hi = 0.0, 1.0
            for _ in range(40):
                mid = (lo + hi) / 2
                if solve_min_slack(g, [mid] * g.n).y_star <= 0:
                    lo = mid
                else:
                    hi = mid
            max_min_marginal = lo
            chi = float(chi_fractional(g).value)
            assert chi == pytest.approx(1.0 / max_min_marginal, abs=1e-6)


class TestSerialization:
    def test_lp_result_json(self):
        r = solve_min_slack(cycle(5), [Fraction(2, 5)] * 5, mode="exact")
        payload = r.to_jsonable()
        parsed = json.loads(json.dumps(payload, sort_keys=True))
        assert parsed["y_star"] == "0/1"
        assert parsed["iterations"] == r.iterations
        assert all("/" in e["prob"] for e in parsed["support"])
        assert parsed["support"] == [{"set": [0, 2], "prob": "1/5"}, {"set": [0, 3], "prob": "1/5"},
                                     {"set": [1, 3], "prob": "1/5"}, {"set": [1, 4], "prob": "1/5"},
                                     {"set": [2, 4], "prob": "1/5"}]

    def test_lift_distribution(self):
        d = make_distribution([((0, 2), Fraction(1, 2)), ((1,), Fraction(1, 2))])
        lifted = lift_distribution(d, [5, 7, 9])
        assert {s.vertices for s, _ in lifted.support} == {(5, 9), (7,)}
