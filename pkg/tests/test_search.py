"""Tests for the exact exponential searches, against brute force and networkx."""

from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import from_nx, uz
from uzgraph.invariants import is_hamiltonian
from uzgraph.ringspec import parse_ring
from uzgraph.search import (
    chromatic_coloring,
    greedy_coloring,
    greedy_independent_set,
    hamiltonian_cycle,
    is_proper_coloring,
    k_coloring,
    max_clique,
    max_independent_set,
    min_dominating_set,
)
from uzgraph.sweep import family_specs

# every swept ring of order at most 16
SMALL_RINGS = (
    [f"zn:{n}" for n in range(1, 17)]
    + [s for s in family_specs("products", 2, 7) if parse_ring(s).order <= 16]
    + family_specs("polyq", 2, 4)
)

small_graphs = st.builds(
    lambda n, p, seed: from_nx(nx.gnp_random_graph(n, p, seed=seed)),
    st.integers(1, 9), st.sampled_from([0.2, 0.4, 0.6, 0.8]), st.integers(0, 10_000),
)


def _is_cycle(G, cycle):
    n = G.vertex_count
    return (
        sorted(cycle) == list(range(n))
        and all(G.has_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n))
    )


def _brute_chromatic(G):
    """Fewest independent sets covering V, by DP over vertex subsets."""
    n = G.vertex_count
    nbr = [sum(1 << u for u in G.neighbors(v)) for v in range(n)]
    indep = [True] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        indep[mask] = indep[rest] and not nbr[low] & rest
    best = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        sub, best[mask] = mask, n
        while sub:
            if sub & low and indep[sub]:
                best[mask] = min(best[mask], best[mask ^ sub] + 1)
            sub = (sub - 1) & mask
    return best[(1 << n) - 1]


def _brute_domination(G):
    n = G.vertex_count
    closed = [set(G.neighbors(v)) | {v} for v in range(n)]
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            if set().union(*(closed[v] for v in S)) == set(range(n)):
                return k
    return 0


class TestHamiltonian:
    @pytest.mark.parametrize("g", [nx.cycle_graph(6), nx.complete_bipartite_graph(3, 3),
                                   nx.complete_graph(5), nx.hypercube_graph(3)])
    def test_found(self, g):
        G = from_nx(g)
        assert _is_cycle(G, hamiltonian_cycle(G))

    @pytest.mark.parametrize("g", [nx.petersen_graph(), nx.complete_bipartite_graph(2, 3),
                                   nx.path_graph(4), nx.complete_graph(2)])
    def test_absent(self, g):
        assert hamiltonian_cycle(from_nx(g)) is None

    def test_z8(self):
        _, _, G = uz("zn:8")
        assert _is_cycle(G, hamiltonian_cycle(G))

    def test_unbalanced_bipartite_rejected(self):
        assert hamiltonian_cycle(from_nx(nx.complete_bipartite_graph(7, 8))) is None

    @pytest.mark.parametrize("m, k", [(m, k) for m in range(1, 9) for k in range(m, 17 - m)])
    def test_complete_bipartite_fast_path_matches_search(self, m, k):
        G = from_nx(nx.complete_bipartite_graph(m, k))
        assert is_hamiltonian(G, limit=16) is (hamiltonian_cycle(G) is not None)

    @pytest.mark.parametrize("spec", SMALL_RINGS)
    def test_ring_fast_path_matches_search(self, spec):
        _, _, G = uz(spec)
        cycle = hamiltonian_cycle(G)
        assert is_hamiltonian(G, limit=16) is (cycle is not None)
        if cycle is not None:
            assert _is_cycle(G, cycle)


class TestGreedyIndependentSet:
    @given(small_graphs)
    @settings(max_examples=60, deadline=None)
    def test_maximal_and_independent(self, G):
        picked = set(greedy_independent_set(G))
        assert all(not G.has_edge(u, v) for u, v in combinations(picked, 2))
        assert all(v in picked or any(G.has_edge(v, u) for u in picked) for v in range(G.vertex_count))

    def test_z21_picks_every_unit(self):
        _, facts, G = uz("zn:21")
        picked = greedy_independent_set(G)
        assert facts.units <= set(picked)
        assert 2 * len(picked) > G.vertex_count


class TestClique:
    def test_k5(self):
        assert max_clique(from_nx(nx.complete_graph(5))) == [0, 1, 2, 3, 4]

    def test_z15_has_triangle(self):
        _, _, G = uz("zn:15")
        clique = max_clique(G)
        assert len(clique) >= 3
        assert all(G.has_edge(u, v) for u, v in combinations(clique, 2))

    @given(small_graphs)
    @settings(max_examples=40, deadline=None)
    def test_matches_networkx(self, G):
        g = G.to_networkx()
        assert len(max_clique(G)) == max(len(c) for c in nx.find_cliques(g))

    @given(small_graphs)
    @settings(max_examples=40, deadline=None)
    def test_independent_set_is_complement_clique(self, G):
        S = max_independent_set(G)
        assert not any(G.has_edge(u, v) for u, v in combinations(S, 2))
        comp = nx.complement(G.to_networkx())
        assert len(S) == max(len(c) for c in nx.find_cliques(comp))


class TestColoring:
    def test_petersen(self):
        G = from_nx(nx.petersen_graph())
        colors = chromatic_coloring(G)
        assert is_proper_coloring(G, colors)
        assert max(colors) + 1 == 3

    def test_odd_cycle_not_2_colourable(self):
        G = from_nx(nx.cycle_graph(7))
        assert k_coloring(G, 2) is None
        assert is_proper_coloring(G, k_coloring(G, 3))

    def test_greedy_is_proper(self):
        _, _, G = uz("zn:21")
        assert is_proper_coloring(G, greedy_coloring(G))

    @given(small_graphs)
    @settings(max_examples=30, deadline=None)
    def test_matches_brute_force(self, G):
        colors = chromatic_coloring(G)
        assert is_proper_coloring(G, colors)
        assert max(colors) + 1 == _brute_chromatic(G)


class TestDomination:
    @pytest.mark.parametrize("g,gamma", [
        (nx.petersen_graph(), 3), (nx.cycle_graph(6), 2), (nx.star_graph(5), 1),
        (nx.complete_bipartite_graph(3, 4), 2), (nx.empty_graph(3), 3),
    ])
    def test_known(self, g, gamma):
        assert len(min_dominating_set(from_nx(g))) == gamma

    @given(small_graphs)
    @settings(max_examples=40, deadline=None)
    def test_matches_brute_force(self, G):
        D = min_dominating_set(G)
        assert nx.is_dominating_set(G.to_networkx(), D)
        assert len(D) == _brute_domination(G)
