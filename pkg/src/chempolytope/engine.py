"""Polytope of realizable edge-type triples for one (n, m).

Small and degenerate pairs come straight from the catalog.  In the general
regime the vertices are computed geometrically: every triple of active facets
is intersected with exact arithmetic, points violating some active facet are
dropped, and the survivors are reconciled with the closed-form candidates.
Vertex labels follow the catalogued type whose coincidence pattern fits.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .core import (ChemPolytopeError, FacetInequality, LabeledVertex, OrderSize, Point3,
                   PolytopeDescription)
from .extreme_types import match_types
from .facets import active_facets, lookup_small_case, small_case_polytope
from .hull import cross, dot
from .realizability import check_point
from .vertices import candidate_vertices, group_by_point

MAX_VERTICES = 16
MAX_FACETS = 10


class EngineMismatch(ChemPolytopeError, RuntimeError):
    code = "ENGINE_MISMATCH"


class NonIntegerVertex(ChemPolytopeError, ArithmeticError):
    code = "NONINT_VERTEX"


class UnrealizableVertex(ChemPolytopeError, RuntimeError):
    code = "UNREALIZABLE_VERTEX"


def classify(ns: OrderSize) -> str:
    if ns.in_general_regime():
        return "GeneralFull"
    case = lookup_small_case(ns.n, ns.m)
    assert case is not None, f"({ns.n},{ns.m}) missing from the small-case catalog"
    return "SmallFull" if case.dimension == 3 else f"Degenerate{case.dimension}"


def intersect(f1: FacetInequality, f2: FacetInequality, f3: FacetInequality):
    """Unique common point of three facet planes, or None when they do not meet in one point."""
    a1, a2, a3 = f1.normal(), f2.normal(), f3.normal()
    c23, c31, c12 = cross(a2, a3), cross(a3, a1), cross(a1, a2)
    det = dot(a1, c23)
    if det == 0:
        return None
    # x = (b1 (a2 x a3) + b2 (a3 x a1) + b3 (a1 x a2)) / det
    num = [f1.rhs * c23[i] + f2.rhs * c31[i] + f3.rhs * c12[i] for i in range(3)]
    return Point3.of(*(Fraction(v, det) for v in num))


def facet_vertices(facets: list[FacetInequality]) -> dict[tuple, Point3]:
    found: dict[tuple, Point3] = {}
    for f1, f2, f3 in combinations(facets, 3):
        p = intersect(f1, f2, f3)
        if p is None or tuple(p) in found:
            continue
        if all(f.holds(p) for f in facets):
            found[tuple(p)] = p
    return found


def build_polytope(ns: OrderSize, reconcile: bool = True) -> PolytopeDescription:
    small = small_case_polytope(ns)
    if small is not None:
        return small
    facets = active_facets(ns)
    geometric = facet_vertices(facets)
    for key, p in geometric.items():
        if not p.is_integral():
            raise NonIntegerVertex(f"vertex {p.render()} at ({ns.n},{ns.m}) is not integral")
        verdict = check_point(ns, p)
        if not verdict.realizable:
            raise UnrealizableVertex(
                f"vertex {p.render()} at ({ns.n},{ns.m}) fails {','.join(verdict.failed_conditions)}")
    labels = group_by_point(candidate_vertices(ns))
    if reconcile and set(geometric) != set(labels):
        missing = sorted(set(labels) - set(geometric))
        extra = sorted(set(geometric) - set(labels))
        raise EngineMismatch(
            f"(n,m)=({ns.n},{ns.m}): candidates not found geometrically {missing} "
            f"{[labels[k] for k in missing]}; geometric vertices without a candidate {extra}")
    # prefer the coincidence pattern of a catalogued type when one fits
    types, typed = match_types(labels)
    if typed is not None:
        labels = typed
    vertices = []
    for key in sorted(geometric):
        p = geometric[key]
        supports = tuple(f.id for f in facets if f.tight(p))
        vertices.append(LabeledVertex(p, tuple(labels.get(key, ())), supports))
    return PolytopeDescription(ns, 3, "GeneralFull", (), tuple(facets), tuple(vertices),
                               "|".join(types))


def vertex_count_bound_check(ns: OrderSize) -> bool:
    desc = build_polytope(ns)
    return len(desc.vertices) <= MAX_VERTICES and len(desc.facets) <= MAX_FACETS
