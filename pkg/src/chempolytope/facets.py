"""Facet inequality families and the catalog of small or degenerate polytopes.

Every family is written as ``a12*m12 + a13*m13 + a33*m33 >= rhs`` where the
coefficients are exact polynomials in ``n`` and ``m``.  A family is *active* at
(n, m) when its condition holds and (n, m) lies in the general regime
``max(12, n-1) <= m <= floor((3n-3)/2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (ChemPolytopeError, FacetInequality, LabeledVertex, LinearEquality,
                   OrderSize, Point3, PolytopeDescription, in_general_regime)
from .expr import ALWAYS, Cond, Expr, m, n


class OutOfRegime(ChemPolytopeError, ValueError):
    code = "OUT_OF_REGIME"


@dataclass(frozen=True)
class FacetFamily:
    id: str
    a12: Expr
    a13: Expr
    a33: Expr
    rhs: Expr
    condition: Cond = ALWAYS
    # m23 form for the one family that is easier to read that way
    note: str = ""

    def evaluate(self, n_: int, m_: int) -> FacetInequality:
        vals = [e.evaluate(n_, m_) for e in (self.a12, self.a13, self.a33, self.rhs)]
        if any(v.denominator != 1 for v in vals):
            raise ArithmeticError(f"{self.id} has non-integer data at ({n_},{m_})")
        return FacetInequality(self.id, *(int(v) for v in vals))

    def is_active(self, n_: int, m_: int) -> bool:
        return in_general_regime(n_, m_) and self.condition.holds(n_, m_)

    def as_dict(self) -> dict:
        out = {
            "id": self.id,
            "a12": self.a12.render(),
            "a13": self.a13.render(),
            "a33": self.a33.render(),
            "rhs": self.rhs.render(),
            "condition": self.condition.render(),
        }
        if self.note:
            out["note"] = self.note
        return out


def _f(id_, a12, a13, a33, rhs, cond=ALWAYS, note=""):
    lift = Expr.lift
    return FacetFamily(id_, lift(a12), lift(a13), lift(a33), lift(rhs), cond, note)


_k = 3 * n - 2 * m

# Ordered as in the published facet table; ids follow its numbering.
FACET_FAMILIES: tuple[FacetFamily, ...] = (
    _f("F2", 1, 0, 0, 0),
    _f("F3", 0, 1, 0, 0),
    _f("F5", 0, 0, 1, 0, (5 * m).le(6 * n - 4)),
    _f("F9", -3, 0, 0, 2 * m - 3 * n + 2, (m % 3).eq(2)),
    _f("F8", -6, -3, 0, 4 * m - 6 * n + 2, (m % 3).eq(1)),
    _f("F1", -4, -3, 1, 5 * m - 6 * n),
    _f("F11", -3, -3, 3, 5 * m - 6 * n + 2, (5 * m).le(6 * n - 5) & (m % 3).eq(2)),
    _f("F14", -4, -2, 2, 5 * m - 6 * n + 2, (5 * m).le(6 * n - 2) & ((m - 2 * n) % 4).eq(2)),
    _f("F13", -4, 0, 4, 5 * m - 6 * n + 3, (5 * m).le(6 * n - 3) & ((m - 2 * n) % 4).eq(1)),
    _f("F12", -12, -8, 4, 15 * m - 18 * n + 3, (5 * m).le(6 * n - 1) & ((m - 2 * n) % 4).eq(3)),
    _f("F10", -6, -6, 3, 10 * m - 12 * n + 2, (5 * m).le(6 * n - 4) & (m % 3).eq(1)),
    _f("F4", 1, 1, -1, 3 * n - 3 * m, n.le(m) & (2 * m).le(3 * n - 6)),
    _f("F6", 2, 1, -1, 3 * n - 3 * m + 1, m.ne(n) & (n % 2).eq(1)),
    _f("F18", 2 * (n - 2), n - 3, -(n - 1), 0, m.eq(n) & (n % 2).eq(1)),
    _f("F7", 2 * (n - 4), n - 2, -(n - 4), -2 * n + 10, m.eq(n + 1) & (n % 2).eq(0)),
    # (3n-2m)(m12+m23) + 4 m13 >= 6n-4m after eliminating m23, divided by 2
    _f("F7bis", 2 * _k, _k + 2, -_k, 6 * m * m + 9 * n * n - 15 * n * m - 2 * m + 3 * n,
       m.ge(n + 2) & (n % 2).eq(0),
       note="equivalently (3n - 2m)(m12 + m23) + 4m13 >= 6n - 4m"),
    _f("F17", 2 * (n - 4), n - 4, -(n - 6), 4 * n - 16, m.eq(n - 1) & (n % 2).eq(0)),
    _f("F19", n - 9, n - 6, -(n - 6), 2 * n - 18, m.eq(n - 1) & (n % 3).eq(0)),
    _f("F20", 2 * n - 16, 2 * n - 13, -(2 * n - 10), 4 * n - 32, m.eq(n - 1) & (n % 3).eq(2)),
    _f("F15", n - 7, n - 6, -(n - 4), 2 * n - 14, m.eq(n - 1)),
    _f("F16", 2, 2, -1, -1, m.eq(n + 1)),
)

# Facets that only appear for a few small full-dimensional cases.
EXTRA_FAMILIES: tuple[FacetFamily, ...] = (
    _f("F22", 0, 2, -4, 0),
    _f("F23", 0, 4, -4, 0),
    _f("F24", 2, 5, -4, 0),
    _f("F25", 2, 8, -4, 0),
)

FAMILY_BY_ID = {f.id: f for f in FACET_FAMILIES + EXTRA_FAMILIES}


def facet_family(fid: str) -> FacetFamily:
    try:
        return FAMILY_BY_ID[fid]
    except KeyError:
        raise KeyError(f"unknown facet id {fid!r}") from None


def f7bis_m23_form(n_: int, m_: int, m12: int, m13: int, m33: int) -> bool:
    """The m23-based statement of F7bis, for cross-checking the stored form."""
    m23 = 6 * m_ - 6 * n_ + 3 * m12 + 2 * m13 - 2 * m33
    return (3 * n_ - 2 * m_) * (m12 + m23) + 4 * m13 >= 6 * n_ - 4 * m_


def active_facets(ns: OrderSize) -> list[FacetInequality]:
    if not ns.in_general_regime():
        raise OutOfRegime(
            f"(n,m)=({ns.n},{ns.m}) is outside max(12, n-1) <= m <= floor((3n-3)/2); "
            "use the small-case catalog")
    return [f.evaluate(ns.n, ns.m) for f in FACET_FAMILIES if f.condition.holds(ns.n, ns.m)]


def activity_signature(n_: int, m_: int) -> frozenset[str]:
    return frozenset(f.id for f in FACET_FAMILIES if f.condition.holds(n_, m_))


# -- points listed per facet to show it is facet defining --------------------------

@dataclass(frozen=True)
class FacetWitnessRow:
    facet: str
    families: tuple[str, str, str]
    condition: Cond


def _w(fid, a, b, c, cond):
    return FacetWitnessRow(fid, (a, b, c), cond)


FACET_WITNESS_ROWS: tuple[FacetWitnessRow, ...] = (
    _w("F2", "V6", "V8c", "V12b", (5 * m).ge(6 * n + 1)),
    _w("F2", "V1", "V8c", "V10c", n.le(m) & (5 * m).le(6 * n)),
    _w("F2", "V8c", "V10a", "V12a", m.eq(n - 1)),
    _w("F3", "V6", "V11a", "V12b", (5 * m).ge(6 * n + 1)),
    _w("F3", "V1", "V11a", "V12b", (5 * m).ge(6 * n - 3) & (5 * m).le(6 * n)),
    _w("F3", "V1", "V7c", "V11a", n.le(m) & (5 * m).le(6 * n - 4)),
    _w("F3", "V2", "V7c", "V11c", m.eq(n - 1)),
    _w("F5", "V1", "V7c", "V10a", n.le(m) & (5 * m).le(6 * n - 4)),
    _w("F5", "V2", "V7c", "V10b", m.eq(n - 1)),
    _w("F9", "V11a", "V11b", "V11c", (m % 3).eq(2)),
    _w("F8", "V11a", "V11b", "V11c", (m % 3).eq(1)),
    _w("F1", "V6", "V8c", "V11a", (5 * m).ge(6 * n + 3)),
    _w("F1", "V8c", "V10c", "V11a", (5 * m).le(6 * n + 2)),
    _w("F11", "V7c", "V10a", "V10c", (5 * m).eq(6 * n - 5)),
    _w("F11", "V10a", "V10b", "V10c", (5 * m).le(6 * n - 8) & (m % 3).eq(2)),
    _w("F14", "V7b", "V10a", "V10c", (5 * m).eq(6 * n - 2)),
    _w("F14", "V7a", "V7b", "V7c", (5 * m).le(6 * n - 6) & ((m - 2 * n) % 4).eq(2)),
    _w("F13", "V7a", "V7b", "V7c", (5 * m).le(6 * n - 3) & ((m - 2 * n) % 4).eq(1)),
    _w("F12", "V7b", "V7c", "V10c", (5 * m).eq(6 * n - 5) | (5 * m).eq(6 * n - 1)),
    _w("F12", "V7a", "V7b", "V7c", (5 * m).le(6 * n - 9) & ((m - 2 * n) % 4).eq(3)),
    _w("F10", "V10a", "V10b", "V10c", (5 * m).le(6 * n - 4) & (m % 3).eq(1)),
    _w("F4", "V11b", "V11c", "V12c", m.ge(n + 2) & (2 * m).le(3 * n - 6) & (m % 3).ne(0)),
    _w("F4", "V8c", "V11a", "V12c",
       m.ge(n + 2) & (2 * m).le(3 * n - 6) & (m % 3).eq(0) & (n % 2).eq(0)),
    _w("F4", "V8d", "V11a", "V12c",
       m.ge(n + 2) & (2 * m).le(3 * n - 7) & (m % 3).eq(0) & (n % 2).eq(1)),
    _w("F4", "V8c", "V9a", "V11b", m.eq(n + 1) & (n % 2).eq(0)),
    _w("F4", "V8d", "V9a", "V11b", m.eq(n + 1) & (n % 2).eq(1)),
    _w("F4", "V1", "V11b", "V11c", m.eq(n) & (n % 3).ne(0)),
    _w("F4", "V1", "V8c", "V11a", m.eq(n) & (n % 6).eq(0)),
    _w("F4", "V1", "V8d", "V11a", m.eq(n) & (n % 6).eq(3)),
    _w("F6", "V8c", "V8d", "V12b", m.ge(n + 2) & (2 * m).le(3 * n - 3) & (n % 2).eq(1)),
    _w("F6", "V8c", "V8d", "V9c", m.eq(n + 1) & (n % 2).eq(1)),
    _w("F6", "V2", "V8c", "V8d", m.eq(n - 1) & (n % 2).eq(1)),
    _w("F18", "V1", "V8c", "V8d", m.eq(n) & (n % 2).eq(1)),
    _w("F7", "V8c", "V9a", "V9c", m.eq(n + 1) & (n % 2).eq(0)),
    _w("F7bis", "V8c", "V12b", "V12c", m.ge(n + 2) & (n % 2).eq(0)),
    _w("F17", "V2", "V8c", "V12a", m.eq(n - 1) & (n % 2).eq(0)),
    _w("F19", "V2", "V11b", "V11c", m.eq(n - 1) & (n % 3).eq(0)),
    _w("F20", "V2", "V11b", "V11c", m.eq(n - 1) & (n % 3).eq(2)),
    _w("F15", "V2", "V8d", "V11b", m.eq(n - 1) & (n % 2).eq(1)),
    _w("F15", "V2", "V8c", "V11b", m.eq(n - 1) & (n % 2).eq(0)),
    _w("F16", "V9a", "V9b", "V9c", m.eq(n + 1)),
)


# -- small and degenerate cases ------------------------------------------------------

@dataclass(frozen=True)
class SmallCase:
    """One row of the small-case catalog; ``points`` may depend on (n, m)."""

    key: str
    dimension: int
    label: str = ""
    points: tuple = ()
    facet_ids: tuple[str, ...] = ()

    def evaluate_points(self, n_: int, m_: int) -> list[Point3]:
        out = []
        for p in self.points:
            out.append(Point3.of(*(c(n_, m_) if callable(c) else c for c in p)))
        return out


_SMALL_ROWS: dict[tuple[int, int], SmallCase] = {}


def _row(n_, m_, dim, points, label="", facets=()):
    _SMALL_ROWS[(n_, m_)] = SmallCase(f"{n_},{m_}", dim, label, tuple(points), tuple(facets))


_row(3, 2, 0, [(2, 0, 0)])
_row(3, 3, 0, [(0, 0, 0)])
_row(4, 3, 1, [(0, 3, 0), (2, 0, 0)])
_row(4, 4, 1, [(0, 0, 0), (0, 1, 0)])
_row(4, 5, 0, [(0, 0, 1)])
_row(5, 4, 1, [(1, 2, 0), (2, 0, 0)])
_row(5, 5, 3, [(0, 0, 0), (0, 1, 0), (0, 2, 1), (1, 0, 0)], "P76", ("F2", "F5", "F11", "F22"))
_row(5, 6, 2, [(0, 0, 0), (0, 0, 1), (0, 1, 3)])
_row(6, 5, 3, [(0, 4, 1), (1, 2, 0), (2, 0, 0), (2, 1, 0)], "P77", ("F5", "F11", "F15", "F17"))
_row(6, 6, 3, [(0, 0, 0), (0, 2, 0), (0, 3, 3), (1, 0, 0), (1, 1, 1)], "P78",
     ("F1", "F2", "F5", "F14", "F23"))
_row(6, 7, 3, [(0, 0, 0), (0, 0, 1), (0, 1, 2), (0, 2, 5), (1, 0, 3)], "P79",
     ("F1", "F2", "F3", "F7", "F12"))
_row(7, 6, 3, [(0, 4, 0), (1, 3, 1), (2, 0, 0), (3, 0, 0)], "P80", ("F1", "F5", "F6", "F15"))
_row(7, 7, 3, [(0, 0, 0), (0, 2, 0), (0, 3, 2), (1, 0, 0), (1, 1, 0), (1, 2, 3), (2, 0, 1)],
     "P81", ("F1", "F2", "F3", "F5", "F10", "F13", "F18", "F24"))
_row(7, 8, 3, [(0, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 3), (0, 2, 4), (1, 0, 2), (1, 0, 3),
               (1, 1, 5)], "P82", ("F1", "F2", "F3", "F6", "F9", "F14", "F16"))
_row(7, 9, 3, [(0, 0, 3), (0, 0, 5), (0, 1, 6), (1, 0, 7)], "P73")
_row(8, 7, 3, [(0, 4, 0), (0, 5, 2), (1, 3, 0), (2, 0, 0), (2, 2, 1), (3, 0, 0)], "P83",
     ("F1", "F5", "F10", "F12", "F15", "F17", "F20"))
_row(8, 8, 3, [(0, 0, 0), (0, 2, 0), (0, 3, 1), (0, 4, 4), (2, 0, 0), (2, 0, 1), (2, 1, 3)],
     "P84", ("F1", "F2", "F3", "F4", "F5", "F9", "F11", "F25"))
_row(8, 9, 3, [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 3), (0, 3, 6), (1, 0, 1), (1, 1, 5),
               (2, 0, 5)], "P85", ("F1", "F2", "F3", "F4", "F7", "F13", "F16"))
_row(8, 10, 3, [(0, 0, 2), (0, 0, 5), (0, 2, 8), (1, 0, 6), (1, 0, 7)], "P74")
_row(9, 8, 3, [(0, 4, 0), (0, 5, 1), (1, 4, 2), (2, 0, 0), (2, 2, 0), (3, 0, 0), (3, 1, 1)],
     "P86", ("F1", "F5", "F6", "F11", "F14", "F15", "F19"))
_row(9, 9, 3, [(0, 0, 0), (0, 3, 0), (0, 4, 3), (1, 3, 4), (2, 0, 0), (3, 0, 3)], "P22")
_row(9, 10, 3, [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 3), (0, 2, 2), (0, 3, 5), (1, 0, 0),
                (1, 1, 5), (1, 2, 6), (2, 0, 4), (2, 0, 5)], "P34")
_row(9, 11, 3, [(0, 0, 1), (0, 0, 5), (0, 2, 7), (1, 0, 5), (1, 0, 7), (1, 1, 8)], "P75")
_row(10, 9, 3, [(0, 4, 0), (0, 5, 0), (0, 6, 3), (2, 0, 0), (3, 0, 0), (3, 1, 0), (4, 0, 1)],
     "P11")
_row(10, 10, 3, [(0, 0, 0), (0, 3, 0), (0, 4, 2), (0, 5, 5), (1, 2, 0), (2, 0, 0), (2, 2, 4),
                 (3, 0, 2), (3, 0, 3)], "P23")
_row(10, 11, 3, [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 3), (0, 2, 1), (0, 4, 7), (1, 0, 0),
                 (1, 1, 5), (2, 0, 3), (2, 0, 5), (2, 1, 6)], "P35")
_row(11, 10, 3, [(0, 4, 0), (0, 5, 0), (0, 6, 2), (1, 4, 0), (1, 5, 3), (2, 0, 0), (3, 2, 2),
                 (4, 0, 0), (4, 0, 1)], "P12")
_row(11, 11, 3, [(0, 0, 0), (0, 3, 0), (0, 4, 1), (0, 5, 4), (1, 4, 5), (2, 0, 0), (2, 1, 0),
                 (3, 0, 1), (3, 0, 3), (3, 1, 4)], "P24")
_row(12, 11, 3, [(0, 4, 0), (0, 5, 0), (0, 6, 1), (0, 7, 4), (2, 0, 0), (2, 3, 0), (4, 0, 0),
                 (4, 0, 1), (4, 1, 2)], "P1")

EXPLICIT_SMALL_CASES = dict(_SMALL_ROWS)

CUBIC_FAMILY = SmallCase("even n >= 4, m = 3n/2", 0, points=((0, 0, lambda n_, m_: m_),))
NEAR_CUBIC_ODD_FAMILY = SmallCase("odd n >= 5, m = (3n-1)/2", 0,
                                  points=((0, 0, lambda n_, m_: m_ - 2),))
NEAR_CUBIC_EVEN_FAMILY = SmallCase(
    "even n >= 6, m = (3n-2)/2", 2,
    points=((0, 0, lambda n_, m_: m_ - 4), (0, 0, lambda n_, m_: m_ - 3),
            (0, 1, lambda n_, m_: m_ - 1)))


def lookup_small_case(n_: int, m_: int) -> Optional[SmallCase]:
    if (n_, m_) in EXPLICIT_SMALL_CASES:
        return EXPLICIT_SMALL_CASES[(n_, m_)]
    if n_ >= 4 and n_ % 2 == 0 and 2 * m_ == 3 * n_:
        return CUBIC_FAMILY
    if n_ >= 5 and n_ % 2 == 1 and 2 * m_ == 3 * n_ - 1:
        return NEAR_CUBIC_ODD_FAMILY
    if n_ >= 6 and n_ % 2 == 0 and 2 * m_ == 3 * n_ - 2:
        return NEAR_CUBIC_EVEN_FAMILY
    return None


def _degenerate_system(case: SmallCase, n_: int, m_: int, pts: list[Point3]):
    """Equalities and (within the affine hull) inequalities of a low-dimensional case."""
    if case.dimension == 0:
        (p,) = pts
        eqs = [LinearEquality(1, 0, 0, int(p[0])), LinearEquality(0, 1, 0, int(p[1])),
               LinearEquality(0, 0, 1, int(p[2]))]
        return eqs, []
    if (n_, m_) == (4, 3):
        return ([LinearEquality(0, 0, 1, 0), LinearEquality(3, 2, 0, 6)],
                [FacetInequality("D1", 1, 0, 0, 0), FacetInequality("D2", -1, 0, 0, -2)])
    if (n_, m_) == (4, 4):
        return ([LinearEquality(1, 0, 0, 0), LinearEquality(0, 0, 1, 0)],
                [FacetInequality("D1", 0, 1, 0, 0), FacetInequality("D2", 0, -1, 0, -1)])
    if (n_, m_) == (5, 4):
        return ([LinearEquality(0, 0, 1, 0), LinearEquality(2, 1, 0, 4)],
                [FacetInequality("D1", 0, 1, 0, 0), FacetInequality("D2", 0, -1, 0, -2)])
    if case.dimension == 2:
        # triangle on the plane m12 = 0; covers (5,6) and the even (3n-2)/2 family
        return ([LinearEquality(1, 0, 0, 0)],
                [FacetInequality("D1", 0, 1, 0, 0),
                 FacetInequality("D2", 0, -3, 1, 5 * m_ - 6 * n_),
                 FacetInequality("D3", 0, 2, -1, 6 * n_ - 5 * m_ - 1)])
    raise AssertionError(f"no degenerate system stored for ({n_},{m_})")


def small_case_polytope(ns: OrderSize) -> Optional[PolytopeDescription]:
    """Catalogued description for (n, m) outside the general regime, else None."""
    if ns.in_general_regime():
        return None
    case = lookup_small_case(ns.n, ns.m)
    if case is None:  # pragma: no cover - the catalog covers every valid pair
        raise AssertionError(f"valid pair ({ns.n},{ns.m}) missing from small-case catalog")
    pts = sorted(case.evaluate_points(ns.n, ns.m))
    if case.dimension < 3:
        eqs, ineqs = _degenerate_system(case, ns.n, ns.m, pts)
        regime = f"Degenerate{case.dimension}"
    else:
        eqs = []
        if case.facet_ids:
            ineqs = [facet_family(fid).evaluate(ns.n, ns.m) for fid in case.facet_ids]
        else:
            ineqs = name_facets_like_catalog(ns, _facets_from_points(pts))
        regime = "SmallFull"
    vertices = tuple(
        LabeledVertex(p, (), tuple(f.id for f in ineqs if f.tight(p))) for p in pts)
    return PolytopeDescription(ns, case.dimension, regime, tuple(eqs), tuple(ineqs),
                               vertices, case.label)


def _facets_from_points(pts: list[Point3]) -> list[FacetInequality]:
    """Facets of a small case given only by its extreme points.

    Each hull facet is named after the catalogued family with the same normal
    direction when one exists, otherwise ``H<k>``.
    """
    from .hull import exact_hull

    hull = exact_hull([tuple(int(c) for c in p) for p in pts])
    return [FacetInequality(f"H{k}", *(int(c) for c in a), int(b))
            for k, (a, b) in enumerate(hull.facets, 1)]


def name_facets_like_catalog(ns: OrderSize, facets: list[FacetInequality]) -> list[FacetInequality]:
    """Rename hull facets after catalog families whose evaluated inequality is the same."""
    out = []
    fams = [f.evaluate(ns.n, ns.m) for f in FACET_FAMILIES + EXTRA_FAMILIES]
    for f in facets:
        match = next((g for g in fams if same_halfspace(f, g)), None)
        out.append(FacetInequality(match.id, match.a12, match.a13, match.a33, match.rhs)
                   if match else f)
    return out


def same_halfspace(f: FacetInequality, g: FacetInequality) -> bool:
    """True when the two inequalities are positive multiples of each other."""
    u = (f.a12, f.a13, f.a33, f.rhs)
    v = (g.a12, g.a13, g.a33, g.rhs)
    if not any(u[:3]) or not any(v[:3]):
        return False
    i = next(k for k in range(3) if u[k])
    if v[i] == 0 or (u[i] > 0) != (v[i] > 0):
        return False
    r = Fraction(v[i], u[i])
    return all(Fraction(b) == r * a for a, b in zip(u, v))
