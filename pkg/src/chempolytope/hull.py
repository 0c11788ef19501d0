"""Exact convex hull of a small set of integer points in 3-space.

Everything is integer arithmetic.  Full-dimensional inputs use incremental
insertion: a point that satisfies every current facet is skipped, otherwise the
hull is rebuilt from the current vertices plus the new point by checking every
triple.  Vertex counts stay tiny here, so this is fast and easy to trust.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Iterable

Vec = tuple[int, int, int]
Facet = tuple[Vec, int]  # (a, b) meaning a . x >= b


def sub(u, v) -> Vec:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def dot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v) -> Vec:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def primitive(v: Vec) -> Vec:
    g = reduce(math.gcd, v, 0)
    return tuple(c // g for c in v) if g else v  # type: ignore[return-value]


def det3(a, b, c) -> int:
    return dot(a, cross(b, c))


def rank(vectors: Iterable[Vec]) -> int:
    """Rank of a set of integer 3-vectors."""
    vs = [v for v in vectors if any(v)]
    if not vs:
        return 0
    first = vs[0]
    second = next((v for v in vs if any(cross(first, v))), None)
    if second is None:
        return 1
    normal = cross(first, second)
    return 3 if any(dot(normal, v) for v in vs) else 2


@dataclass(frozen=True)
class ExactHull3:
    dimension: int
    vertices: tuple[Vec, ...]
    facets: tuple[Facet, ...] = ()
    equalities: tuple[Facet, ...] = ()

    def contains(self, p) -> bool:
        return (all(dot(a, p) == b for a, b in self.equalities)
                and all(dot(a, p) >= b for a, b in self.facets))

    def vertex_set(self) -> set[Vec]:
        return set(self.vertices)


def _full_hull(points: list[Vec]) -> list[Facet]:
    found: dict[Facet, None] = {}
    for p, q, r in combinations(points, 3):
        normal = primitive(cross(sub(q, p), sub(r, p)))
        if not any(normal):
            continue
        b = dot(normal, p)
        vals = [dot(normal, x) - b for x in points]
        if all(v >= 0 for v in vals):
            found[(normal, b)] = None
        elif all(v <= 0 for v in vals):
            found[((-normal[0], -normal[1], -normal[2]), -b)] = None
    return list(found)


def _hull_vertices(points: Iterable[Vec], facets: list[Facet]) -> list[Vec]:
    out = []
    for p in points:
        tight = [a for a, b in facets if dot(a, p) == b]
        if rank(tight) == 3:
            out.append(p)
    return out


def _affine_basis(points: list[Vec]):
    """Return (origin, spanning directions) for the affine hull."""
    origin = points[0]
    dirs: list[Vec] = []
    for p in points[1:]:
        d = sub(p, origin)
        if rank(dirs + [d]) > len(dirs):
            dirs.append(d)
            if len(dirs) == 3:
                break
    return origin, dirs


def _convex_hull_2d(pts: list[tuple[int, int]]) -> list[tuple[int, int]]:
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _as_int(c) -> int:
    f = Fraction(c)
    if f.denominator != 1:
        raise ValueError(f"exact_hull works on integer points, got coordinate {c}")
    return int(f)


def exact_hull(points: Iterable) -> ExactHull3:
    pts = sorted({tuple(_as_int(c) for c in p) for p in points})
    if not pts:
        raise ValueError("exact_hull needs at least one point")
    origin, dirs = _affine_basis(pts)
    dim = len(dirs)
    if dim == 0:
        p = pts[0]
        eqs = (((1, 0, 0), p[0]), ((0, 1, 0), p[1]), ((0, 0, 1), p[2]))
        return ExactHull3(0, (p,), (), eqs)
    if dim == 1:
        d = primitive(dirs[0])
        lo = min(pts, key=lambda p: dot(d, p))
        hi = max(pts, key=lambda p: dot(d, p))
        eqs = _line_equalities(origin, d)
        facets = ((d, dot(d, lo)), ((-d[0], -d[1], -d[2]), -dot(d, hi)))
        return ExactHull3(1, tuple(sorted((lo, hi))), facets, eqs)
    if dim == 2:
        normal = primitive(cross(dirs[0], dirs[1]))
        # drop the coordinate along which the plane is not vertical
        k = next(i for i in range(3) if normal[i])
        keep = [i for i in range(3) if i != k]
        proj = {(p[keep[0]], p[keep[1]]): p for p in pts}
        ring = [proj[q] for q in _convex_hull_2d(list(proj))]
        facets = []
        centroid_num = tuple(sum(p[i] for p in ring) for i in range(3))
        for a, b in zip(ring, ring[1:] + ring[:1]):
            nvec = primitive(cross(normal, sub(b, a)))
            rhs = dot(nvec, a)
            # orient toward the interior (centroid scaled by len(ring))
            if dot(nvec, centroid_num) < rhs * len(ring):
                nvec, rhs = (-nvec[0], -nvec[1], -nvec[2]), -rhs
            facets.append((nvec, rhs))
        eq = ((normal, dot(normal, origin)),)
        return ExactHull3(2, tuple(sorted(ring)), tuple(sorted(facets)), eq)
    return _hull3(pts)


def _line_equalities(origin: Vec, d: Vec) -> tuple[Facet, ...]:
    # two independent normals orthogonal to d
    cands = [cross(d, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    normals: list[Vec] = []
    for c in cands:
        c = primitive(c)
        if any(c) and rank(normals + [c]) > len(normals):
            normals.append(c)
        if len(normals) == 2:
            break
    return tuple((nv, dot(nv, origin)) for nv in normals)


def _hull3(pts: list[Vec]) -> ExactHull3:
    # seed with an affinely independent 4-set, then insert the rest
    origin = pts[0]
    seed = [origin]
    dirs: list[Vec] = []
    for p in pts[1:]:
        d = sub(p, origin)
        if rank(dirs + [d]) > len(dirs):
            dirs.append(d)
            seed.append(p)
            if len(seed) == 4:
                break
    current = seed
    facets = _full_hull(current)
    # extreme points in a few directions first keeps the rebuilds rare
    order = sorted(pts, key=lambda p: -max(abs(c) for c in p))
    for p in order:
        if all(dot(a, p) >= b for a, b in facets):
            continue
        current = _hull_vertices(current, facets) + [p]
        facets = _full_hull(current)
    verts = _hull_vertices(current, facets)
    return ExactHull3(3, tuple(sorted(verts)), tuple(sorted(facets)), ())
