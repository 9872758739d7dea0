import pytest

from uzgraph.anatomy import ring_facts
from uzgraph.graph import build_uz
from uzgraph.ringspec import parse_ring


def uz(spec: str):
    """(ring, facts, graph) for a ring spec."""
    R = parse_ring(spec)
    facts = ring_facts(R)
    return R, facts, build_uz(R, facts)


@pytest.fixture
def clean_env(monkeypatch):
    """Drop every UZG_ variable so .env files and the shell cannot leak in."""
    import os

    for k in list(os.environ):
        if k.startswith("UZG_"):
            monkeypatch.delenv(k, raising=False)
    monkeypatch.setattr("uzgraph.config.load_dotenv", lambda *a, **kw: False)
    monkeypatch.setattr("uzgraph.cli.load_dotenv", lambda *a, **kw: False)
    return monkeypatch


def from_nx(g, label: str = ""):
    """UzGraph with the vertices of a networkx graph relabelled 0..n-1 in sorted order."""
    import networkx as nx
    import numpy as np

    from uzgraph.graph import UzGraph

    nodes = sorted(g.nodes())
    return UzGraph(nx.to_numpy_array(g, nodelist=nodes, dtype=bool) & ~np.eye(len(nodes), dtype=bool), label)
