"""Graph predicates and parameters of G_UZ(R), and the per-graph InvariantReport.

Exact polynomial shortcuts run first. Exponential searches only run at or
below their vertex limit; above it the value is ``Skipped``, never a guess.
Distances and girth use ``INF`` when undefined.
"""

from __future__ import annotations

import csv
import io
import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, NamedTuple, Optional, Union

import networkx as nx
import numpy as np

from .config import Limits
from .graph import UzGraph, VertexPartition
from .planarity import planar_by_subdivision, planar_lr, quick_planarity
from .search import (
    chromatic_coloring,
    greedy_independent_set,
    hamiltonian_cycle,
    max_clique,
    max_independent_set,
    min_dominating_set,
)

log = logging.getLogger(__name__)

INF = math.inf


@dataclass(frozen=True)
class Skipped:
    """Placeholder for a value whose search exceeded ``limit`` vertices."""

    limit: int

    def __str__(self) -> str:
        return f"skipped({self.limit})"


Count = Union[int, Skipped]
Distance = Union[int, float]


def is_skipped(value: Any) -> bool:
    return isinstance(value, Skipped)


# ----------------------------------------------------------------------------
# Degrees and connectivity
# ----------------------------------------------------------------------------


def degrees(G: UzGraph) -> list[int]:
    return [int(d) for d in G.degrees()]


def connected_components(G: UzGraph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    n = G.vertex_count
    seen = np.zeros(n, dtype=bool)
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp = np.zeros(n, dtype=bool)
        comp[s] = True
        frontier = comp.copy()
        while frontier.any():
            frontier = G.adjacency[frontier].any(axis=0) & ~comp
            comp |= frontier
        seen |= comp
        out.append([int(v) for v in np.flatnonzero(comp)])
    return out


def is_connected(G: UzGraph) -> bool:
    return G.vertex_count > 0 and len(connected_components(G)) == 1


# ----------------------------------------------------------------------------
# Bipartite structure
# ----------------------------------------------------------------------------


class BipartiteResult(NamedTuple):
    ok: bool
    partition: Optional[VertexPartition]
    odd_cycle: Optional[list[int]]


def _tree_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[v] != -1:
        v = parent[v]
        path.append(v)
    return path


def is_bipartite(G: UzGraph) -> BipartiteResult:
    """Two-colour by breadth-first layering.

    On success the partition holds the non-empty colour classes (blocks "A"
    and "B"); on failure ``odd_cycle`` is a closed walk's vertex list with no
    repeats whose length is odd.
    """
    n = G.vertex_count
    color = [-1] * n
    parent = [-1] * n
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        for u in queue:
            for w in G.neighbors(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    pu, pw = _tree_path(parent, u), _tree_path(parent, w)
                    common = set(pu) & set(pw)
                    lca = next(x for x in pu if x in common)
                    cycle = pu[: pu.index(lca) + 1] + pw[: pw.index(lca)][::-1]
                    return BipartiteResult(False, None, cycle)
    a = [v for v in range(n) if color[v] == 0]
    b = [v for v in range(n) if color[v] == 1]
    blocks = [(lbl, blk) for lbl, blk in (("A", a), ("B", b)) if blk]
    return BipartiteResult(True, VertexPartition.of([b for _, b in blocks], [lbl for lbl, _ in blocks]), None)


def is_complete_bipartite(G: UzGraph) -> tuple[bool, Optional[tuple[int, int]]]:
    """(True, (m, n)) with m <= n iff G is a connected K_{m,n}, m, n >= 1."""
    if G.vertex_count < 2 or not is_connected(G):
        return False, None
    bip = is_bipartite(G)
    if not bip.ok or len(bip.partition.blocks) != 2:
        return False, None
    m, k = sorted(bip.partition.sizes())
    if G.edge_count != m * k:
        return False, None
    return True, (m, k)


def is_star(G: UzGraph) -> bool:
    """K_{1,n-1}, counting K_1 and K_2."""
    n = G.vertex_count
    if n == 1:
        return True
    return G.edge_count == n - 1 and bool((G.degrees() == n - 1).any())


def is_cycle_graph(G: UzGraph) -> bool:
    return G.vertex_count >= 3 and bool((G.degrees() == 2).all()) and is_connected(G)


def is_path_graph(G: UzGraph) -> bool:
    n = G.vertex_count
    if n == 1:
        return True
    return G.edge_count == n - 1 and int(G.degrees().max()) <= 2 and is_connected(G)


def is_eulerian(G: UzGraph) -> bool:
    """Connected over all vertices, nontrivial, every degree even."""
    return G.vertex_count >= 2 and bool((G.degrees() % 2 == 0).all()) and is_connected(G)


# ----------------------------------------------------------------------------
# Hamiltonicity and planarity
# ----------------------------------------------------------------------------


def is_hamiltonian(G: UzGraph, limit: int = Limits.hamiltonian) -> Union[bool, Skipped]:
    """Exact answer or Skipped(limit).

    Cheap necessary conditions are applied at any size: minimum degree two,
    2-connectivity, and no independent set larger than n/2 (units of a ring
    are pairwise non-adjacent, so this rejects e.g. Z_15 and Z_21). Only
    graphs that pass them go to backtracking.
    """
    n = G.vertex_count
    if n < 3 or int(G.degrees().min()) < 2 or not is_connected(G):
        return False
    complete, sizes = is_complete_bipartite(G)
    if complete:
        return sizes[0] == sizes[1] >= 2
    bip = is_bipartite(G)
    if bip.ok:
        a, b = bip.partition.sizes()
        if a != b:
            return False
    if is_cycle_graph(G):
        return True
    if not nx.is_biconnected(G.to_networkx()):
        return False
    if 2 * len(greedy_independent_set(G)) > n:
        return False
    if n > limit:
        return Skipped(limit)
    return hamiltonian_cycle(G) is not None


def is_planar(G: UzGraph, *, method: str = "lr",
              limit: int = Limits.planarity_subdivision) -> Union[bool, Skipped]:
    """Quick accept/reject, then ``method``: "lr" (left-right) or "subdivision" (Kuratowski)."""
    quick = quick_planarity(G)
    if quick is not None:
        return quick
    if method == "lr":
        return planar_lr(G)
    if method == "subdivision":
        if G.vertex_count > limit:
            return Skipped(limit)
        return planar_by_subdivision(G)
    raise ValueError(f"unknown planarity method {method!r}")


# ----------------------------------------------------------------------------
# Distances, girth, short cycles
# ----------------------------------------------------------------------------


def distance_matrix(G: UzGraph) -> np.ndarray:
    """All-pairs BFS distances; -1 where unreachable."""
    n = G.vertex_count
    dist = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        seen = np.zeros(n, dtype=bool)
        seen[s] = True
        frontier = seen.copy()
        d = 0
        while frontier.any():
            dist[s, frontier] = d
            frontier = G.adjacency[frontier].any(axis=0) & ~seen
            seen |= frontier
            d += 1
    return dist


def distance_matrix_by_powers(G: UzGraph) -> np.ndarray:
    """Distances as the least k with a k-walk, from boolean adjacency powers."""
    n = G.vertex_count
    a = G.adjacency.astype(np.int64)
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    walk = a > 0
    for k in range(1, n):
        fresh = walk & (dist == -1)
        dist[fresh] = k
        walk = (walk.astype(np.int64) @ a) > 0
    return dist


def _diameter_from(dist: np.ndarray) -> Distance:
    if dist.shape[0] < 2 or (dist < 0).any():
        return INF
    return int(dist.max())


def diameter(G: UzGraph) -> Distance:
    """Largest distance; INF for fewer than two vertices or a disconnected graph."""
    return _diameter_from(distance_matrix(G))


def has_C3(G: UzGraph) -> bool:
    a = G.adjacency.astype(np.int64)
    return bool(((a @ a) * a).any())


def has_C4(G: UzGraph) -> bool:
    """Some pair of distinct vertices shares two neighbours."""
    a = G.adjacency.astype(np.int64)
    common = a @ a
    np.fill_diagonal(common, 0)
    return bool((common >= 2).any())


def find_triangle(G: UzGraph) -> Optional[tuple[int, int, int]]:
    for u, v in G.edges():
        both = np.flatnonzero(G.adjacency[u] & G.adjacency[v])
        if both.size:
            return tuple(sorted((u, v, int(both[0]))))
    return None


def find_c4(G: UzGraph) -> Optional[list[int]]:
    """A 4-cycle [u, x, w, y] with u, w sharing the neighbours x < y."""
    a = G.adjacency.astype(np.int64)
    common = a @ a
    np.fill_diagonal(common, 0)
    pairs = np.argwhere(np.triu(common >= 2, k=1))
    if not pairs.size:
        return None
    u, w = (int(x) for x in pairs[0])
    x, y = (int(v) for v in np.flatnonzero(G.adjacency[u] & G.adjacency[w])[:2])
    return [u, x, w, y]


def has_c4_bruteforce(G: UzGraph) -> bool:
    """Every 4-set in each of its three cyclic orders."""
    adj = G.adjacency
    for a, b, c, d in combinations(range(G.vertex_count), 4):
        for p, q, r, s in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if adj[p, q] and adj[q, r] and adj[r, s] and adj[s, p]:
                return True
    return False


def girth(G: UzGraph) -> Distance:
    """Shortest cycle length; INF if acyclic."""
    if has_C3(G):
        return 3
    if has_C4(G):
        return 4
    n = G.vertex_count
    best = INF
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        for u in queue:
            if 2 * dist[u] + 1 >= best:
                break
            for w in G.neighbors(u):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def kst_c4_condition(t: int, r: int) -> bool:
    """t > sqrt(r) + 1, exactly: t - 1 > 0 and (t - 1)^2 > r."""
    return t - 1 > 0 and (t - 1) ** 2 > r


# ----------------------------------------------------------------------------
# Exact parameters with limits
# ----------------------------------------------------------------------------


def clique_number(G: UzGraph, limit: int = Limits.clique) -> Count:
    n = G.vertex_count
    if n == 0:
        return 0
    if G.edge_count == 0:
        return 1
    if not has_C3(G):
        return 2
    if n > limit:
        return Skipped(limit)
    return len(max_clique(G))


def chromatic_number(G: UzGraph, limit: int = Limits.chromatic) -> Count:
    n = G.vertex_count
    if n == 0:
        return 0
    if G.edge_count == 0:
        return 1
    if is_bipartite(G).ok:
        return 2
    if n > limit:
        return Skipped(limit)
    return max(chromatic_coloring(G, lower=3)) + 1


def _bipartite_matching_size(G: UzGraph, side: frozenset[int]) -> int:
    g = G.to_networkx()
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=side)
    return len(matching) // 2


def independence_number(G: UzGraph, limit: int = Limits.independence) -> Count:
    n = G.vertex_count
    if G.edge_count == 0:
        return n
    complete, sizes = is_complete_bipartite(G)
    if complete:
        return sizes[1]
    bip = is_bipartite(G)
    if bip.ok:
        # Konig: alpha = |V| - maximum matching
        return n - _bipartite_matching_size(G, bip.partition.blocks[0])
    if n > limit:
        return Skipped(limit)
    return len(max_independent_set(G))


def domination_number(G: UzGraph, limit: int = Limits.domination) -> Count:
    n = G.vertex_count
    if n == 0:
        return 0
    if bool((G.degrees() == n - 1).any()):
        return 1
    complete, sizes = is_complete_bipartite(G)
    if complete:
        return 2
    if n > limit:
        return Skipped(limit)
    return len(min_dominating_set(G))


# ----------------------------------------------------------------------------
# Partitions
# ----------------------------------------------------------------------------


def is_partition_independent(G: UzGraph, P: VertexPartition) -> tuple[bool, Optional[tuple[tuple[int, int], str]]]:
    """(True, None) iff no edge lies inside a block, else (False, ((u, v), block label))."""
    n = G.vertex_count
    if not P.covers(n):
        raise ValueError(f"partition does not cover the {n} vertices of {G.ring_label or 'the graph'}")
    block = np.empty(n, dtype=np.int64)
    for i, b in enumerate(P.blocks):
        block[list(b)] = i
    for u, v in G.edges():
        if block[u] == block[v]:
            return False, ((u, v), P.labels[int(block[u])])
    return True, None


# ----------------------------------------------------------------------------
# Report
# ----------------------------------------------------------------------------


CSV_FIELDS = (
    "ring", "vertex_count", "edge_count", "degree_sequence", "max_degree", "min_degree",
    "is_regular", "connected", "diameter", "girth", "is_bipartite", "is_complete_bipartite",
    "is_star", "is_cycle_graph", "is_path_graph", "is_eulerian", "is_planar", "is_hamiltonian",
    "clique_number", "chromatic_number", "independence_number", "domination_number",
    "has_C3", "has_C4", "skipped",
)

_SKIPPABLE = ("is_hamiltonian", "clique_number", "chromatic_number", "independence_number",
              "domination_number")


def _plain(value: Any) -> Any:
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return value


@dataclass
class InvariantReport:
    ring: str
    vertex_count: int
    edge_count: int
    degree_sequence: list[int]
    max_degree: int
    min_degree: int
    is_regular: bool
    connected: bool
    diameter: Distance
    girth: Distance
    is_bipartite: bool
    bipartition: Optional[VertexPartition]
    is_complete_bipartite: bool
    complete_bipartite_sizes: Optional[tuple[int, int]]
    is_star: bool
    is_cycle_graph: bool
    is_path_graph: bool
    is_eulerian: bool
    is_planar: bool
    is_hamiltonian: Union[bool, Skipped]
    clique_number: Count
    chromatic_number: Count
    independence_number: Count
    domination_number: Count
    has_C3: bool
    has_C4: bool
    skipped: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready dict in a fixed key order; skipped values become null."""
        out: dict[str, Any] = {}
        for name in CSV_FIELDS[:-1]:
            value = getattr(self, name)
            out[name] = None if is_skipped(value) else _plain(value)
            if name == "is_complete_bipartite":
                out["complete_bipartite_sizes"] = (
                    list(self.complete_bipartite_sizes) if self.complete_bipartite_sizes else None
                )
            if name == "is_bipartite":
                out["bipartition"] = self.bipartition.to_dict() if self.bipartition else None
        out["skipped"] = list(self.skipped)
        return out

    def csv_values(self) -> list[str]:
        row = []
        for name in CSV_FIELDS:
            value = getattr(self, name)
            if name == "degree_sequence":
                value = " ".join(map(str, value))
            elif name == "skipped":
                value = ";".join(value)
            elif is_skipped(value):
                value = ""
            row.append(str(_plain(value)))
        return row

    def to_csv_row(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerow(self.csv_values())
        return buf.getvalue()


def csv_header() -> str:
    return ",".join(CSV_FIELDS) + "\n"


def _planarity(G: UzGraph, limits: Limits) -> bool:
    """Left-right decision, cross-checked by subdivision search within its limit."""
    quick = quick_planarity(G)
    if quick is not None:
        return quick
    planar = planar_lr(G)
    cap = limits.planarity_subdivision
    if G.vertex_count > cap:
        log.debug("%s: subdivision cross-check skipped(%d)", G.ring_label, cap)
    elif planar_by_subdivision(G) != planar:
        log.warning("%s: left-right test says planar=%s, subdivision search disagrees", G.ring_label, planar)
    else:
        log.debug("%s: planarity cross-checked by subdivision search", G.ring_label)
    return planar


def analyze(G: UzGraph, limits: Optional[Limits] = None) -> InvariantReport:
    """Every invariant of G, searches bounded by ``limits``."""
    limits = limits or Limits()
    degs = degrees(G)
    dist = distance_matrix(G)
    bip = is_bipartite(G)
    complete, sizes = is_complete_bipartite(G)
    report = InvariantReport(
        ring=G.ring_label,
        vertex_count=G.vertex_count,
        edge_count=G.edge_count,
        degree_sequence=degs,
        max_degree=max(degs, default=0),
        min_degree=min(degs, default=0),
        is_regular=len(set(degs)) <= 1,
        connected=is_connected(G),
        diameter=_diameter_from(dist),
        girth=girth(G),
        is_bipartite=bip.ok,
        bipartition=bip.partition,
        is_complete_bipartite=complete,
        complete_bipartite_sizes=sizes,
        is_star=is_star(G),
        is_cycle_graph=is_cycle_graph(G),
        is_path_graph=is_path_graph(G),
        is_eulerian=is_eulerian(G),
        is_planar=_planarity(G, limits),
        is_hamiltonian=is_hamiltonian(G, limits.hamiltonian),
        clique_number=clique_number(G, limits.clique),
        chromatic_number=chromatic_number(G, limits.chromatic),
        independence_number=independence_number(G, limits.independence),
        domination_number=domination_number(G, limits.domination),
        has_C3=has_C3(G),
        has_C4=has_C4(G),
    )
    report.skipped = [name for name in _SKIPPABLE if is_skipped(getattr(report, name))]
    for name in report.skipped:
        log.warning("%s: %s %s", G.ring_label, name, getattr(report, name))
    log.debug("analyzed %s: diameter=%s girth=%s", G.ring_label, report.diameter, report.girth)
    return report
