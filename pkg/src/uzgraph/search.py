"""Exact exponential searches on small graphs, over integer bitmask rows.

Callers decide whether a graph is small enough; nothing here checks limits.
Every function returns a witness (cycle, clique, coloring, dominating set)
rather than a bare number so results can be re-verified.
"""

from __future__ import annotations

from collections.abc import Iterator
from typing import Optional

import networkx as nx
import numpy as np

from .graph import UzGraph


def bitmasks(G: UzGraph) -> list[int]:
    """Row v as an int whose bit u is set iff u ~ v."""
    weights = [1 << u for u in range(G.vertex_count)]
    return [sum(w for w, a in zip(weights, row) if a) for row in G.adjacency.tolist()]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _connected_within(nbr: list[int], source: int, allowed: int) -> bool:
    reach = frontier = 1 << source
    while frontier:
        grown = reach
        for u in _bits(frontier):
            grown |= nbr[u] & allowed
        frontier = grown & ~reach
        reach = grown
    return reach == allowed


def greedy_independent_set(G: UzGraph) -> list[int]:
    """A maximal independent set, picked in ascending degree order (ties by vertex)."""
    nbr = bitmasks(G)
    blocked = 0
    picked: list[int] = []
    for v in sorted(range(G.vertex_count), key=lambda u: (nbr[u].bit_count(), u)):
        if not blocked >> v & 1:
            picked.append(v)
            blocked |= nbr[v] | (1 << v)
    return picked


def hamiltonian_cycle(G: UzGraph) -> Optional[list[int]]:
    """A Hamiltonian cycle as a vertex list (first vertex not repeated), or None.

    Depth-first extension from a minimum-degree vertex; candidates are tried in
    fewest-onward-options order. A branch is cut as soon as some unvisited
    vertex has fewer than two usable neighbours left, or the unvisited vertices
    together with the path end stop being connected.
    Disconnected graphs and bipartite graphs with unequal sides are rejected
    before any search.
    """
    n = G.vertex_count
    if n < 3:
        return None
    nbr = bitmasks(G)
    if any(m.bit_count() < 2 for m in nbr):
        return None
    full = (1 << n) - 1
    if not _connected_within(nbr, 0, full):
        return None
    g = G.to_networkx()
    if nx.is_bipartite(g):
        a, b = nx.bipartite.sets(g)
        if len(a) != len(b):
            return None
    start = min(range(n), key=lambda v: nbr[v].bit_count())
    path = [start]

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(nbr[v] >> start & 1)
        remaining = full & ~visited
        if not nbr[start] & remaining:
            return False
        usable = remaining | (1 << v) | (1 << start)
        for w in _bits(remaining):
            if (nbr[w] & usable).bit_count() < 2:
                return False
        if not _connected_within(nbr, v, remaining | (1 << v)):
            return False
        options = list(_bits(nbr[v] & remaining))
        options.sort(key=lambda w: (nbr[w] & remaining).bit_count())
        for w in options:
            path.append(w)
            if extend(w, visited | (1 << w)):
                return True
            path.pop()
        return False

    return list(path) if extend(start, 1 << start) else None


def _color_sort(P: int, nbr: list[int]) -> tuple[list[int], list[int]]:
    """Greedy colour classes over P; returns vertices and their class numbers, ascending."""
    order: list[int] = []
    colors: list[int] = []
    uncolored = P
    k = 0
    while uncolored:
        k += 1
        Q = uncolored
        while Q:
            v = (Q & -Q).bit_length() - 1
            Q &= ~(1 << v) & ~nbr[v]
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(k)
    return order, colors


def _max_clique(nbr: list[int], n: int) -> list[int]:
    best: list[int] = []

    def expand(R: list[int], P: int) -> None:
        nonlocal best
        order, colors = _color_sort(P, nbr)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + colors[i] <= len(best):
                return
            v = order[i]
            sub = P & nbr[v]
            if sub:
                expand(R + [v], sub)
            elif len(R) + 1 > len(best):
                best = R + [v]
            P &= ~(1 << v)

    if n:
        expand([], (1 << n) - 1)
    return sorted(best)


def max_clique(G: UzGraph) -> list[int]:
    """A maximum clique (branch and bound with greedy-colouring bounds)."""
    return _max_clique(bitmasks(G), G.vertex_count)


def max_independent_set(G: UzGraph) -> list[int]:
    """A maximum independent set, as a maximum clique of the complement."""
    n = G.vertex_count
    full = (1 << n) - 1
    comp = [full & ~m & ~(1 << v) for v, m in enumerate(bitmasks(G))]
    return _max_clique(comp, n)


def _dsatur_order(colors: list[int], adj: list[list[int]]) -> int:
    best, key = -1, (-1, -1)
    for v, c in enumerate(colors):
        if c >= 0:
            continue
        sat = len({colors[u] for u in adj[v] if colors[u] >= 0})
        k = (sat, len(adj[v]))
        if k > key:
            best, key = v, k
    return best


def greedy_coloring(G: UzGraph) -> list[int]:
    """DSATUR greedy colouring; an upper bound for the chromatic number."""
    adj = [G.neighbors(v) for v in range(G.vertex_count)]
    colors = [-1] * G.vertex_count
    for _ in range(G.vertex_count):
        v = _dsatur_order(colors, adj)
        used = {colors[u] for u in adj[v]}
        colors[v] = next(c for c in range(G.vertex_count) if c not in used)
    return colors


def k_coloring(G: UzGraph, k: int) -> Optional[list[int]]:
    """A proper colouring with at most k colours, or None (DSATUR backtracking)."""
    n = G.vertex_count
    adj = [G.neighbors(v) for v in range(n)]
    colors = [-1] * n

    def bt(count: int, used_max: int) -> bool:
        if count == n:
            return True
        v = _dsatur_order(colors, adj)
        blocked = {colors[u] for u in adj[v]}
        # a fresh colour is interchangeable with any other fresh colour
        for c in range(min(k, used_max + 2)):
            if c in blocked:
                continue
            colors[v] = c
            if bt(count + 1, max(used_max, c)):
                return True
        colors[v] = -1
        return False

    return colors if bt(0, -1) else None


def chromatic_coloring(G: UzGraph, lower: int = 1) -> list[int]:
    """An optimal colouring: try k = lower, lower+1, ... below the DSATUR bound."""
    if G.vertex_count == 0:
        return []
    greedy = greedy_coloring(G)
    upper = max(greedy) + 1
    for k in range(max(1, lower), upper):
        found = k_coloring(G, k)
        if found is not None:
            return found
    return greedy


def min_dominating_set(G: UzGraph) -> list[int]:
    """A minimum dominating set by iterative deepening on its size.

    Each level branches on the closed neighbourhood of the undominated vertex
    with the fewest dominators, and cuts when the remaining picks cannot cover
    what is left even at maximum closed-neighbourhood size.
    """
    n = G.vertex_count
    if n == 0:
        return []
    closed = [m | (1 << v) for v, m in enumerate(bitmasks(G))]
    full = (1 << n) - 1
    widest = max(c.bit_count() for c in closed)

    def search(dominated: int, k: int, chosen: list[int]) -> Optional[list[int]]:
        if dominated == full:
            return chosen
        if k == 0:
            return None
        open_ = full & ~dominated
        if open_.bit_count() > k * widest:
            return None
        u = min(_bits(open_), key=lambda x: closed[x].bit_count())
        options = sorted(_bits(closed[u]), key=lambda w: -(closed[w] & open_).bit_count())
        for w in options:
            found = search(dominated | closed[w], k - 1, chosen + [w])
            if found is not None:
                return found
        return None

    lower = -(-n // widest)
    for k in range(lower, n + 1):
        found = search(0, k, [])
        if found is not None:
            return sorted(found)
    return list(range(n))


def is_proper_coloring(G: UzGraph, colors: list[int]) -> bool:
    c = np.asarray(colors)
    us, vs = np.nonzero(G.adjacency)
    return bool((c[us] != c[vs]).all())
