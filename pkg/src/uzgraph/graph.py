"""The unit-zero divisor graph G_UZ(R) and the vertex partitions used to study it.

Distinct x, y in R are adjacent iff x + y is a unit and x * y is a zero divisor.
All ring elements are vertices, units and zero included.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any, Optional

import networkx as nx
import numpy as np

from .anatomy import Ideal, RingFacts, cosets
from .ring import FiniteRing

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class UzGraph:
    """Simple undirected graph on 0..n-1 stored as a dense symmetric boolean matrix."""

    adjacency: np.ndarray
    ring_label: str = ""
    labels: Optional[tuple[str, ...]] = None
    edge_count: int = field(init=False)

    def __post_init__(self) -> None:
        a = np.array(self.adjacency, dtype=bool)
        n = a.shape[0] if a.ndim == 2 else -1
        if a.shape != (n, n):
            raise ValueError(f"adjacency must be square, got shape {a.shape}")
        if a.diagonal().any():
            v = int(np.flatnonzero(a.diagonal())[0])
            raise ValueError(f"self-loop at vertex {v}")
        if not np.array_equal(a, a.T):
            u, v = (int(x) for x in np.argwhere(a != a.T)[0])
            raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)
        object.__setattr__(self, "edge_count", int(a.sum()) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], ring_label: str = "") -> UzGraph:
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            a[u, v] = a[v, u] = True
        return cls(a, ring_label)

    @property
    def vertex_count(self) -> int:
        return int(self.adjacency.shape[0])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def neighbors(self, v: int) -> list[int]:
        return [int(u) for u in np.flatnonzero(self.adjacency[v])]

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        us, vs = np.nonzero(np.triu(self.adjacency, k=1))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        return f"UzGraph({self.ring_label!r}, v={self.vertex_count}, e={self.edge_count})"


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint, non-empty vertex blocks with display labels."""

    blocks: tuple[frozenset[int], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"B{i}" for i in range(len(self.blocks))))
        if len(self.labels) != len(self.blocks):
            raise ValueError("one label per block")
        seen: set[int] = set()
        for label, block in zip(self.labels, self.blocks):
            if not block:
                raise ValueError(f"empty block {label}")
            if seen & block:
                raise ValueError(f"block {label} overlaps an earlier block at {min(seen & block)}")
            seen |= block

    @classmethod
    def of(cls, blocks: Sequence[Iterable[int]], labels: Sequence[str] = ()) -> VertexPartition:
        return cls(tuple(frozenset(b) for b in blocks), tuple(labels))

    def covers(self, n: int) -> bool:
        return set().union(*self.blocks) == set(range(n))

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def block_of(self, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if v in b:
                return i
        raise KeyError(v)

    def to_dict(self) -> dict[str, Any]:
        return {label: sorted(b) for label, b in zip(self.labels, self.blocks)}


def build_uz(R: FiniteRing, facts: RingFacts) -> UzGraph:
    """G_UZ(R) straight from the definition: x ~ y iff x+y in U(R) and xy in Z(R)."""
    unit = np.zeros(R.order, dtype=bool)
    unit[list(facts.units)] = True
    zd = np.zeros(R.order, dtype=bool)
    zd[list(facts.zero_divisors)] = True
    adj = unit[R.add_table] & zd[R.mul_table]
    np.fill_diagonal(adj, False)
    labels = tuple(R.label(x) for x in R.elements())
    G = UzGraph(adj, R.name, labels)
    log.debug("built %r", G)
    return G


def maximal_ideal_partition(R: FiniteRing, facts: RingFacts) -> VertexPartition:
    """[U(R), I_1, I_2 - I_1, I_3 - (I_1 u I_2), ...], empty differences dropped."""
    if not facts.maximal_ideals:
        raise ValueError(f"{R.name} has no maximal ideals (zero ring)")
    blocks = [frozenset(facts.units)]
    labels = ["U(R)"]
    covered: set[int] = set()
    for k, ideal in enumerate(facts.maximal_ideals, 1):
        block = frozenset(ideal.members - covered)
        covered |= ideal.members
        if block:
            blocks.append(block)
            labels.append(f"I{k}" if k == 1 else f"I{k}*")
    return VertexPartition(tuple(blocks), tuple(labels))


def coset_blocks(R: FiniteRing, ideal: Ideal) -> VertexPartition:
    """The cosets r + I as a vertex partition."""
    cs = cosets(R, ideal)
    return VertexPartition(
        tuple(c.members for c in cs),
        tuple(f"{R.label(c.representative)}+I" for c in cs),
    )


def project_graph(G: UzGraph, projection: np.ndarray, order: int, ring_label: str = "") -> UzGraph:
    """Image of G under a vertex map: x ~ y maps to p(x) ~ p(y) whenever p(x) != p(y)."""
    proj = np.asarray(projection, dtype=np.int64)
    q = np.zeros((order, order), dtype=bool)
    us, vs = np.nonzero(G.adjacency)
    keep = proj[us] != proj[vs]
    q[proj[us[keep]], proj[vs[keep]]] = True
    return UzGraph(q, ring_label)


def to_dot(G: UzGraph, *, residues: bool = False) -> str:
    """DOT text; every vertex is declared so isolated ones survive rendering."""
    lines = ["graph G {"]
    for v in range(G.vertex_count):
        lines.append(f'  {v} [label="{G.label(v)}"];' if residues else f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in G.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(G: UzGraph) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["u", "v"])
    w.writerows(G.edges())
    return buf.getvalue()


def to_json(G: UzGraph, *, residues: bool = False) -> str:
    doc: dict[str, Any] = {
        "ring": G.ring_label,
        "vertex_count": G.vertex_count,
        "edge_count": G.edge_count,
        "edges": [list(e) for e in G.edges()],
        "adjacency": [G.neighbors(v) for v in range(G.vertex_count)],
    }
    if residues:
        doc["labels"] = [G.label(v) for v in range(G.vertex_count)]
    return json.dumps(doc, indent=2) + "\n"
