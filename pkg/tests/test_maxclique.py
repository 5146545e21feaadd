"""Exact clique solver: examples, witness soundness, oracle agreement."""

import pytest

from eqlines.maxclique import (
    CliqueResult,
    SimpleGraph,
    degeneracy_order,
    greedy_coloring_bound,
    max_clique,
    to_dimacs,
)
from eqlines.spansearch import SplitMix64


def brute_force_omega(g: SimpleGraph) -> int:
    """Enumerate every clique by extending with higher-indexed vertices."""
    best = 0

    def rec(pool: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while pool:
            v = (pool & -pool).bit_length() - 1
            pool &= pool - 1
            rec(pool & g.adj[v], size + 1)

    rec((1 << g.n) - 1, 0)
    return best


def random_graph(rng: SplitMix64, n: int, density_pct: int) -> SimpleGraph:
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.below(100) < density_pct:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return SimpleGraph(n, tuple(adj))


def assert_witness_ok(g: SimpleGraph, result: CliqueResult) -> None:
    assert len(result.witness) == result.size
    assert len(set(result.witness)) == result.size
    for a in range(result.size):
        for b in range(a + 1, result.size):
            i, j = result.witness[a], result.witness[b]
            assert g.adj[i] >> j & 1, f"witness pair ({i},{j}) not adjacent"


def petersen() -> SimpleGraph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, i + 5))
    return SimpleGraph.from_edges(10, edges)


class TestSimpleGraph:
    def test_from_edges(self):
        g = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
        assert g.degree(1) == 2
        assert g.edge_count() == 2

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            SimpleGraph.from_edges(2, [(0, 0)])

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            SimpleGraph(2, (2, 0))

    def test_rejects_stray_bits(self):
        with pytest.raises(ValueError):
            SimpleGraph(2, (4, 0))


class TestExamples:
    def test_triangle(self):
        g = SimpleGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        result = max_clique(g)
        assert result.size == 3
        assert result.witness == (0, 1, 2)
        assert result.optimal

    def test_five_cycle(self):
        g = SimpleGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        assert max_clique(g).size == 2

    def test_petersen(self):
        assert max_clique(petersen()).size == 2

    def test_empty_graphs(self):
        assert max_clique(SimpleGraph(0, ())).size == 0
        result = max_clique(SimpleGraph(4, (0, 0, 0, 0)))
        assert result.size == 1 and len(result.witness) == 1


class TestColoringBound:
    def test_k4(self):
        g = SimpleGraph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        assert greedy_coloring_bound(g) == 4

    def test_edgeless(self):
        g = SimpleGraph(6, (0,) * 6)
        assert greedy_coloring_bound(g) == 1
        assert greedy_coloring_bound(g, candidates=0) == 0

    def test_petersen_range(self):
        b = greedy_coloring_bound(petersen())
        assert 2 <= b <= 3

    def test_bound_dominates_omega(self):
        rng = SplitMix64(11)
        for _ in range(40):
            g = random_graph(rng, 1 + rng.below(14), 20 + rng.below(70))
            assert greedy_coloring_bound(g) >= brute_force_omega(g)


class TestSolver:
    def test_matches_brute_force(self):
        rng = SplitMix64(12)
        for _ in range(60):
            g = random_graph(rng, 1 + rng.below(14), 10 + rng.below(85))
            result = max_clique(g)
            assert result.optimal
            assert result.size == brute_force_omega(g)
            assert_witness_ok(g, result)

    def test_deterministic_witness(self):
        rng = SplitMix64(13)
        for _ in range(10):
            g = random_graph(rng, 12, 50)
            assert max_clique(g) == max_clique(g)

    def test_time_budget_flag(self):
        # a zero budget must still return a valid (possibly partial) result
        rng = SplitMix64(14)
        g = random_graph(rng, 18, 80)
        result = max_clique(g, time_budget=0.0)
        assert_witness_ok(g, result)
        full = max_clique(g)
        assert full.optimal
        assert result.size <= full.size

    def test_degeneracy_order_is_permutation(self):
        rng = SplitMix64(15)
        g = random_graph(rng, 15, 40)
        order = degeneracy_order(g)
        assert sorted(order) == list(range(15))


class TestDimacs:
    def test_format(self):
        g = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
        text = to_dimacs(g, comment="triangle minus an edge")
        lines = text.splitlines()
        assert lines[0] == "c triangle minus an edge"
        assert lines[1] == "p edge 3 2"
        assert set(lines[2:]) == {"e 1 2", "e 2 3"}
