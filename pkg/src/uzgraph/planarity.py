"""Planarity: quick accept/reject rules, the left-right test, and Kuratowski subdivision search.

The left-right test (networkx ``check_planarity``) is the production decision.
The subdivision search is an independent exhaustive procedure: split into
biconnected blocks, smooth away vertices of degree <= 2, then look for five
branch vertices joined by ten internally disjoint paths (K5) or 3 + 3 branch
vertices joined by nine (K3,3). It returns the subdivision it finds, mapped
back onto the original vertices.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from itertools import combinations
from typing import Optional

import networkx as nx

from .graph import UzGraph

log = logging.getLogger(__name__)


def quick_planarity(G: UzGraph) -> Optional[bool]:
    """Decide the easy cases by counting; None when a full test is needed."""
    v, e = G.vertex_count, G.edge_count
    if v <= 4:
        return True
    g = G.to_networkx()
    if nx.is_forest(g):
        return True
    degrees = G.degrees()
    if nx.is_connected(g) and (degrees == 2).all():
        return True
    if e > 3 * v - 6:
        return False
    if nx.is_bipartite(g) and e > 2 * v - 4:
        return False
    return None


def planar_lr(G: UzGraph) -> bool:
    """Left-right planarity criterion via networkx."""
    planar, _ = nx.check_planarity(G.to_networkx())
    return bool(planar)


def _kernel(block: nx.Graph) -> tuple[nx.Graph, dict[frozenset[int], list[int]]]:
    """Smooth degree-2 vertices (and drop degree <= 1) until none remain.

    Returns the reduced graph and, per reduced edge, the original path it stands
    for. A parallel edge created by smoothing is dropped: a subdivision uses at
    most one route between any two vertices.
    """
    h = nx.Graph(block)
    route = {frozenset(e): list(e) for e in h.edges()}

    def oriented(a: int, b: int) -> list[int]:
        p = route[frozenset((a, b))]
        return p if p[0] == a else p[::-1]

    changed = True
    while changed:
        changed = False
        for v in sorted(h.nodes()):
            if v not in h:
                continue
            d = h.degree(v)
            if d <= 1:
                for u in list(h.neighbors(v)):
                    route.pop(frozenset((u, v)), None)
                h.remove_node(v)
                changed = True
            elif d == 2:
                a, b = sorted(h.neighbors(v))
                path = oriented(a, v) + oriented(v, b)[1:]
                route.pop(frozenset((a, v)))
                route.pop(frozenset((v, b)))
                h.remove_node(v)
                if not h.has_edge(a, b):
                    h.add_edge(a, b)
                    route[frozenset((a, b))] = path
                changed = True
    return h, route


def _simple_paths(adj: dict[int, list[int]], s: int, t: int, blocked: set[int]) -> Iterator[list[int]]:
    """Simple s-t paths whose internal vertices avoid ``blocked``; direct edge first."""
    stack = [(s, [s], {s})]
    while stack:
        v, path, seen = stack.pop()
        if v == t:
            yield path
            continue
        # pushed in reverse so the target and low labels are explored first
        for w in sorted(adj[v], key=lambda w: (w != t, w), reverse=True):
            if w == t:
                stack.append((t, path + [t], seen))
            elif w not in seen and w not in blocked:
                stack.append((w, path + [w], seen | {w}))


def _route_all(adj: dict[int, list[int]], pairs: list[tuple[int, int]],
               used: set[int]) -> Optional[list[list[int]]]:
    if not pairs:
        return []
    (s, t), rest = pairs[0], pairs[1:]
    for p in _simple_paths(adj, s, t, used):
        taken = used | set(p[1:-1])
        if not all(_reachable_avoiding(adj, a, b, taken) for a, b in rest):
            continue
        tail = _route_all(adj, rest, taken)
        if tail is not None:
            return [p, *tail]
    return None


def _reachable_avoiding(adj: dict[int, list[int]], s: int, t: int, blocked: set[int]) -> bool:
    seen, todo = {s}, [s]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w == t:
                return True
            if w not in seen and w not in blocked:
                seen.add(w)
                todo.append(w)
    return False


def _try_branch(adj: dict[int, list[int]], branch: tuple[int, ...],
                pairs: list[tuple[int, int]]) -> Optional[list[list[int]]]:
    blocked = set(branch)
    for s, t in pairs:
        if not _reachable_avoiding(adj, s, t, blocked - {s, t}):
            return None
    # pairs joined by a direct edge first: they never consume internal vertices
    pairs = sorted(pairs, key=lambda p: p[1] not in adj[p[0]])
    return _route_all(adj, pairs, blocked)


def _search_kernel(h: nx.Graph) -> Optional[tuple[str, tuple[int, ...], list[list[int]]]]:
    adj = {v: sorted(h.neighbors(v)) for v in h.nodes()}
    deg3 = sorted(v for v in adj if len(adj[v]) >= 3)
    for six in combinations(deg3, 6):
        first, others = six[0], six[1:]
        for pair in combinations(others, 2):
            side_a = (first, *pair)
            side_b = tuple(v for v in others if v not in pair)
            paths = _try_branch(adj, side_a + side_b, [(a, b) for a in side_a for b in side_b])
            if paths is not None:
                return "K3,3", side_a + side_b, paths
    deg4 = sorted(v for v in adj if len(adj[v]) >= 4)
    for branch in combinations(deg4, 5):
        paths = _try_branch(adj, branch, list(combinations(branch, 2)))
        if paths is not None:
            return "K5", branch, paths
    return None


def kuratowski_subdivision(G: UzGraph) -> Optional[dict]:
    """A K5 or K3,3 subdivision in G as ``{"kind", "branch", "paths"}``, or None if planar."""
    g = G.to_networkx()
    for nodes in sorted(nx.biconnected_components(g), key=lambda c: sorted(c)):
        if len(nodes) < 5:
            continue
        h, route = _kernel(g.subgraph(nodes))
        if h.number_of_nodes() < 5:
            continue
        found = _search_kernel(h)
        if found is None:
            continue
        kind, branch, paths = found
        expanded = []
        for p in paths:
            full = [p[0]]
            for a, b in zip(p, p[1:]):
                seg = route[frozenset((a, b))]
                full.extend((seg if seg[0] == a else seg[::-1])[1:])
            expanded.append(full)
        log.debug("%s: %s subdivision on branch vertices %s", G.ring_label, kind, branch)
        return {"kind": kind, "branch": list(branch), "paths": expanded}
    return None


def planar_by_subdivision(G: UzGraph) -> bool:
    return kuratowski_subdivision(G) is None
