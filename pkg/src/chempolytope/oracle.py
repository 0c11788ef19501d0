"""Exhaustive enumeration of small chemical graphs.

Connected graphs with maximum degree 3 on n vertices are grown one vertex at a
time: every connected graph has a vertex whose removal leaves it connected, so
joining a new vertex to 1..3 unsaturated vertices of every connected graph on
n-1 vertices reaches all of them.  Isomorphic copies are pruned with a small
canonical form (colour refinement plus individualization).

A second, unrelated generator (edge insertion with networkx isomorphism
checks) is kept for cross-checking graph counts.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import networkx as nx

from .core import ChemPolytopeError, OrderSize
from .graphs import ChemicalGraph
from .hull import ExactHull3, exact_hull

log = logging.getLogger(__name__)

DEFAULT_LIMIT = 10
HARD_CAP = 12


class LimitExceeded(ChemPolytopeError, ValueError):
    code = "LIMIT_EXCEEDED"


# -- canonical form ------------------------------------------------------------------

def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Split cells until every vertex in a cell sees each cell equally often."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & mk).bit_count() for mk in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[k] for k in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _code(adj: list[int], order: list[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    code = 0
    n = len(order)
    for i, v in enumerate(order):
        row = adj[v]
        while row:
            low = row & -row
            w = low.bit_length() - 1
            row ^= low
            j = pos[w]
            if j > i:
                code |= 1 << (i * n + j)
    return code


def canonical_code(n: int, adj: list[int]) -> int:
    """Isomorphism-invariant integer code of a graph given as bitmask adjacency."""
    degs = [a.bit_count() for a in adj]
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(degs[v], []).append(v)
    cells = _refine(adj, [by_deg[d] for d in sorted(by_deg)])
    best = None
    stack = [cells]
    while stack:
        cells = stack.pop()
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            code = _code(adj, [c[0] for c in cells])
            if best is None or code < best:
                best = code
            continue
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            stack.append(_refine(adj, split))
    return best  # type: ignore[return-value]


# -- generator -----------------------------------------------------------------------

@lru_cache(maxsize=None)
def connected_subcubic_graphs(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """One edge list per isomorphism class of connected graphs with max degree <= 3."""
    if n < 1:
        return ()
    if n == 1:
        return ((),)
    out: dict[int, tuple] = {}
    for edges in connected_subcubic_graphs(n - 1):
        adj = [0] * n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        free = [v for v in range(n - 1) if adj[v].bit_count() < 3]
        new = n - 1
        for k in (1, 2, 3):
            for nbrs in combinations(free, k):
                child = adj[:]
                for u in nbrs:
                    child[u] |= 1 << new
                    child[new] |= 1 << u
                code = canonical_code(n, child)
                if code not in out:
                    out[code] = edges + tuple((u, new) for u in nbrs)
    log.debug("n=%d: %d connected subcubic graphs", n, len(out))
    return tuple(out.values())


def graph_counts_by_size(n: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for edges in connected_subcubic_graphs(n):
        counts[len(edges)] = counts.get(len(edges), 0) + 1
    return counts


def edge_insertion_counts(n: int) -> dict[int, int]:
    """Independent count of connected subcubic graphs per size.

    Grows all (possibly disconnected) subcubic graphs on n vertices one edge at a
    time from the empty graph and removes isomorphs with networkx.
    """
    level = [nx.empty_graph(n)]
    counts: dict[int, int] = {}
    for m in range(1, 3 * n // 2 + 1):
        buckets: dict[str, list[nx.Graph]] = {}
        for g in level:
            for u, v in combinations(range(n), 2):
                if g.has_edge(u, v) or g.degree(u) >= 3 or g.degree(v) >= 3:
                    continue
                h = g.copy()
                h.add_edge(u, v)
                key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(h, other) for other in bucket):
                    bucket.append(h)
        level = [g for bucket in buckets.values() for g in bucket]
        if not level:
            break
        c = sum(1 for g in level if nx.is_connected(g))
        if c:
            counts[m] = c
    return counts


# -- realizable sets -------------------------------------------------------------------

@dataclass(frozen=True)
class RealizableSet:
    order_size: OrderSize
    points: frozenset
    graph_count: int
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)

    def hull(self) -> ExactHull3:
        return exact_hull(self.points)


def _check_limit(n: int, limit: int) -> None:
    if n > min(limit, HARD_CAP):
        raise LimitExceeded(f"oracle enumeration for n={n} exceeds limit {min(limit, HARD_CAP)}")


def _edge_type_point(n: int, edges) -> tuple[int, int, int]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    m12 = m13 = m33 = 0
    for u, v in edges:
        a, b = sorted((deg[u], deg[v]))
        if a == 1 and b == 2:
            m12 += 1
        elif a == 1 and b == 3:
            m13 += 1
        elif a == 3:
            m33 += 1
    return (m12, m13, m33)


@lru_cache(maxsize=None)
def _realizable_by_size(n: int) -> dict[int, tuple[dict, int]]:
    out: dict[int, tuple[dict, int]] = {}
    for edges in connected_subcubic_graphs(n):
        m = len(edges)
        pts, count = out.get(m, ({}, 0))
        p = _edge_type_point(n, edges)
        pts.setdefault(p, edges)
        out[m] = (pts, count + 1)
    return out


def enumerate_realizable(ns: OrderSize, limit: int = DEFAULT_LIMIT) -> RealizableSet:
    _check_limit(ns.n, limit)
    pts, count = _realizable_by_size(ns.n).get(ns.m, ({}, 0))
    return RealizableSet(ns, frozenset(pts), count, dict(pts))


def oracle_witness(ns: OrderSize, p, limit: int = DEFAULT_LIMIT):
    """A graph from the enumeration realizing p, or None."""
    if ns.n > min(limit, HARD_CAP):
        return None
    edges = enumerate_realizable(ns, limit).witnesses.get(tuple(int(c) for c in p))
    return None if edges is None else ChemicalGraph.from_edges(ns.n, edges)


def all_graphs(ns: OrderSize, limit: int = DEFAULT_LIMIT):
    """Iterate over ChemicalGraph objects, one per isomorphism class, of order n and size m."""
    _check_limit(ns.n, limit)
    for edges in connected_subcubic_graphs(ns.n):
        if len(edges) == ns.m:
            yield ChemicalGraph.from_edges(ns.n, edges)
