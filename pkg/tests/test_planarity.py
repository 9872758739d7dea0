"""Planarity: quick rules, left-right test, Kuratowski subdivision witnesses."""

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import from_nx, uz
from uzgraph.invariants import Skipped, is_planar
from uzgraph.planarity import (
    kuratowski_subdivision,
    planar_by_subdivision,
    planar_lr,
    quick_planarity,
)


def _assert_valid_subdivision(G, found):
    branch, paths = found["branch"], found["paths"]
    if found["kind"] == "K5":
        assert len(branch) == 5
        want = {frozenset(p) for p in combinations(branch, 2)}
    else:
        assert found["kind"] == "K3,3"
        assert len(branch) == 6
        a, b = branch[:3], branch[3:]
        want = {frozenset((x, y)) for x in a for y in b}
    assert {frozenset((p[0], p[-1])) for p in paths} == want
    assert len(paths) == len(want)
    interiors = [v for p in paths for v in p[1:-1]]
    assert len(interiors) == len(set(interiors)), "paths share an internal vertex"
    assert not set(interiors) & set(branch)
    for p in paths:
        assert all(G.has_edge(u, v) for u, v in zip(p, p[1:]))


class TestQuickRules:
    def test_small_graphs_accepted(self):
        assert quick_planarity(from_nx(nx.complete_graph(4))) is True

    def test_forest_accepted(self):
        g = nx.disjoint_union(nx.star_graph(6), nx.path_graph(5))
        assert quick_planarity(from_nx(g)) is True

    def test_cycle_accepted(self):
        assert quick_planarity(from_nx(nx.cycle_graph(9))) is True

    def test_edge_count_rejects_k5(self):
        assert quick_planarity(from_nx(nx.complete_graph(5))) is False

    def test_bipartite_count_rejects_k33(self):
        assert quick_planarity(from_nx(nx.complete_bipartite_graph(3, 3))) is False

    def test_petersen_undecided(self):
        assert quick_planarity(from_nx(nx.petersen_graph())) is None


class TestSubdivision:
    @pytest.mark.parametrize("g, kind", [
        (nx.complete_graph(5), "K5"),
        (nx.complete_bipartite_graph(3, 3), "K3,3"),
    ])
    def test_kuratowski_graphs(self, g, kind):
        G = from_nx(g)
        found = kuratowski_subdivision(G)
        assert found["kind"] == kind
        _assert_valid_subdivision(G, found)

    def test_subdivided_k5_maps_back_to_original_vertices(self):
        g = nx.complete_graph(5)
        g.remove_edge(0, 1)
        nx.add_path(g, [0, 5, 6, 1])
        G = from_nx(g)
        found = kuratowski_subdivision(G)
        _assert_valid_subdivision(G, found)
        assert [0, 5, 6, 1] in found["paths"] or [1, 6, 5, 0] in found["paths"]

    def test_petersen(self):
        G = from_nx(nx.petersen_graph())
        found = kuratowski_subdivision(G)
        assert found is not None
        _assert_valid_subdivision(G, found)

    def test_non_planar_block_behind_a_bridge(self):
        g = nx.disjoint_union(nx.complete_graph(5), nx.cycle_graph(4))
        g.add_edge(0, 5)
        G = from_nx(g)
        _assert_valid_subdivision(G, kuratowski_subdivision(G))

    @pytest.mark.parametrize("g", [
        nx.wheel_graph(8),
        nx.octahedral_graph(),
        nx.hypercube_graph(3),
        nx.cycle_graph(7),
        nx.balanced_tree(2, 3),
        nx.grid_2d_graph(3, 4),
    ], ids=["wheel", "octahedron", "cube", "cycle", "tree", "grid"])
    def test_planar_graphs_have_none(self, g):
        G = from_nx(g)
        assert kuratowski_subdivision(G) is None
        assert planar_by_subdivision(G)
        assert planar_lr(G)

    @settings(max_examples=40, deadline=None)
    @given(
        n=st.integers(5, 9),
        p=st.sampled_from([0.3, 0.5, 0.7]),
        seed=st.integers(0, 10_000),
    )
    def test_agrees_with_left_right(self, n, p, seed):
        G = from_nx(nx.gnp_random_graph(n, p, seed=seed))
        found = kuratowski_subdivision(G)
        assert (found is None) == planar_lr(G)
        if found is not None:
            _assert_valid_subdivision(G, found)


class TestIsPlanar:
    @pytest.mark.parametrize("spec, planar", [
        ("zn:4", True),
        ("zn:6", True),
        ("zn:9", False),
        ("zn:25", False),
    ])
    def test_zn(self, spec, planar):
        _, _, G = uz(spec)
        assert is_planar(G) is planar
        assert is_planar(G, method="subdivision") is planar

    def test_methods_agree_on_undecided_product(self):
        _, _, G = uz("prod:zn:3,zn:3")
        assert is_planar(G, method="subdivision") == is_planar(G, method="lr")

    def test_subdivision_limit(self):
        G = from_nx(nx.petersen_graph())
        assert is_planar(G, method="subdivision", limit=8) == Skipped(8)
        assert is_planar(G, method="subdivision", limit=10) is False

    def test_unknown_method(self):
        with pytest.raises(ValueError, match="unknown planarity method"):
            is_planar(from_nx(nx.petersen_graph()), method="guess")
