"""Construct a chemical graph realizing a given edge-type triple.

Strategies, tried in order:

1. the chorded cycle for (0, 0, 0): a cycle v1..v_{2n-m} plus vertices w_j
   joined to v_{2j-1} and v_{2n-m-2j+1};
2. a skeleton construction.  Degree-3 vertices are joined by direct 33-edges
   (a cycle with chords, a path, or a path plus isolated vertices) and by
   chains of degree-2 vertices; leaves hang off the remaining free slots
   either directly (13-edges) or through a chain (12-edges);
3. a bounded backtracking search over graphs with the prescribed degree counts,
   pruned on the five edge-type counts;
4. for small n, lookup in the exhaustive enumeration.

Every result is recounted before it is returned.
"""

from __future__ import annotations

import logging
from typing import Callable, Optional

from .core import ChemPolytopeError, OrderSize, Point3
from .graphs import ChemicalGraph, InvalidGraph
from .realizability import check_point

log = logging.getLogger(__name__)


class NotRealizable(ChemPolytopeError, ValueError):
    code = "NOT_REALIZABLE"


class ConstructionFailed(ChemPolytopeError, RuntimeError):
    code = "CONSTRUCTION_FAILED"


GUARANTEED_MAX_N = 60
ORACLE_MAX_N = 10


def chorded_cycle(n: int, m: int) -> Optional[list[tuple[int, int]]]:
    """Edges of the chorded cycle; it has no 12-, 13- or 33-edges for n <= m <= 6n/5."""
    length = 2 * n - m
    if not (n <= m and 5 * m <= 6 * n and length >= 3):
        return None
    edges = [(i, (i + 1) % length) for i in range(length)]
    for j in range(1, m - n + 1):
        w = length + j - 1
        edges += [(2 * j - 2, w), (length - 2 * j, w)]
    return edges


def skeleton(n: int, m: int, p: Point3) -> Optional[list[tuple[int, int]]]:
    verdict = check_point(OrderSize(n, m), p)
    if verdict.full_vector is None or verdict.degree_counts is None:
        return None
    v, dc = verdict.full_vector, verdict.degree_counts
    k = dc.n3
    if k == 0:
        if dc.n1 == 2:
            return [(i, i + 1) for i in range(n - 1)]
        if dc.n1 == 0 and n >= 3:
            return [(i, (i + 1) % n) for i in range(n)]
        return None

    a, b, direct = v.m12, v.m13, v.m33
    if (v.m23 - a) % 2 or v.m23 < a:
        return None
    c = (v.m23 - a) // 2
    free = [3] * k
    edges: list[tuple[int, int]] = []

    def join(u, w):
        edges.append((u, w))
        free[u] -= 1
        free[w] -= 1

    if direct >= k:
        if k < 3 or direct - k > k // 2:
            return None
        for i in range(k):
            join(i, (i + 1) % k)
        half = k // 2
        for i in range(direct - k):
            join(i, i + half)
    else:
        for i in range(direct):
            join(i, i + 1)

    chains: list[tuple[int, int]] = []

    def chain(u, w):
        chains.append((u, w))
        free[u] -= 1
        free[w] -= 1

    # link the components (one path then isolated vertices) in a row
    links = max(0, k - direct - 1) if direct < k else 0
    if links > c:
        return None
    for i in range(direct, direct + links):
        chain(i, i + 1)
    for _ in range(c - links):
        order = sorted((u for u in range(k) if free[u] > 0), key=lambda u: (-free[u], u))
        if not order:
            return None
        if len(order) >= 2:
            chain(order[0], order[1])
        elif free[order[0]] >= 2:
            chain(order[0], order[0])
        else:
            return None
    if any(f < 0 for f in free) or sum(free) != a + b:
        return None

    # internal vertices: one per chain and per 12-pendant, loops need two
    loops = sum(1 for u, w in chains if u == w)
    extra = v.m22 - loops
    if extra < 0:
        return None
    lengths = [2 if u == w else 1 for u, w in chains]
    pendant_lengths = [1] * a
    if extra:
        if chains:
            lengths[0] += extra
        elif pendant_lengths:
            pendant_lengths[0] += extra
        else:
            return None

    nxt = k

    def path(u, w, length):
        nonlocal nxt
        prev = u
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, w))

    for (u, w), length in zip(chains, lengths):
        path(u, w, length)
    slots = [u for u in range(k) for _ in range(free[u])]
    for u, length in zip(slots, pendant_lengths + [0] * b):
        prev = u
        for _ in range(length + 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    if nxt != n:
        return None
    return edges


def backtrack(n: int, m: int, p: Point3, node_limit: int = 200_000) -> Optional[list[tuple[int, int]]]:
    """Search graphs with the prescribed degree counts, pruning on edge-type counts."""
    verdict = check_point(OrderSize(n, m), p)
    if not verdict.realizable:
        return None
    v, dc = verdict.full_vector, verdict.degree_counts
    deg = [1] * dc.n1 + [2] * dc.n2 + [3] * dc.n3
    target = {(1, 2): v.m12, (1, 3): v.m13, (2, 2): v.m22, (2, 3): v.m23, (3, 3): v.m33}
    have = dict.fromkeys(target, 0)
    stubs = deg[:]
    adj = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []
    budget = [node_limit]

    def connected() -> bool:
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    def rec() -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            return False
        u = next((x for x in range(n) if stubs[x]), None)
        if u is None:
            return connected()
        tried: set = set()
        for w in range(u + 1, n):
            if not stubs[w] or w in adj[u]:
                continue
            # untouched vertices of equal degree are interchangeable
            sig = (deg[w], stubs[w], frozenset(adj[w])) if stubs[w] == deg[w] else None
            if sig is not None and sig in tried:
                continue
            key = (min(deg[u], deg[w]), max(deg[u], deg[w]))
            if key not in target or have[key] >= target[key]:
                continue
            if sig is not None:
                tried.add(sig)
            have[key] += 1
            stubs[u] -= 1
            stubs[w] -= 1
            adj[u].add(w)
            adj[w].add(u)
            edges.append((u, w))
            if rec():
                return True
            edges.pop()
            adj[u].discard(w)
            adj[w].discard(u)
            stubs[u] += 1
            stubs[w] += 1
            have[key] -= 1
        return False

    return list(edges) if rec() else None


def _oracle(n: int, m: int, p: Point3):
    if n > ORACLE_MAX_N:
        return None
    from .oracle import oracle_witness

    g = oracle_witness(OrderSize(n, m), p)
    return None if g is None else g.sorted_edges()


STRATEGIES: list[tuple[str, Callable]] = [
    ("chorded-cycle", lambda n, m, p: chorded_cycle(n, m) if tuple(p) == (0, 0, 0) else None),
    ("skeleton", skeleton),
    ("backtrack", backtrack),
    ("oracle", _oracle),
]


def build_witness(ns: OrderSize, p, with_strategy: bool = False):
    p = Point3.of(p)
    verdict = check_point(ns, p)
    if not verdict.realizable:
        raise NotRealizable(
            f"{p.render()} is not realizable at (n,m)=({ns.n},{ns.m}): "
            f"fails {','.join(verdict.failed_conditions)} {verdict.detail}".rstrip())
    for name, strategy in STRATEGIES:
        edges = strategy(ns.n, ns.m, p)
        if edges is None:
            continue
        try:
            g = ChemicalGraph.from_edges(ns.n, edges)
        except InvalidGraph as exc:
            log.debug("strategy %s produced an invalid graph: %s", name, exc)
            continue
        if g.m == ns.m and tuple(g.point()) == tuple(p):
            return (g, name) if with_strategy else g
        log.debug("strategy %s produced %s instead of %s", name, g.point(), p)
    raise ConstructionFailed(f"no strategy realized {p.render()} at (n,m)=({ns.n},{ns.m})")
