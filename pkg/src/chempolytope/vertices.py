"""Closed-form candidate extreme points and their realizability conditions.

Each family gives (m12, m13, m33) as formulas in n, m and a few residues.  A
family has two conditions on (n, m): when the point is realizable, and when it
is an extreme point.  Both are in addition to the general regime.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ChemPolytopeError, NonInteger, OrderSize, Point3
from .expr import ALWAYS, Cond, Expr, floor, m, n


class ConditionViolated(ChemPolytopeError, ValueError):
    code = "CONDITION_VIOLATED"


class UnknownFamily(ChemPolytopeError, KeyError):
    code = "UNKNOWN_FAMILY"


@dataclass(frozen=True)
class VertexFamily:
    id: str
    m12: Expr
    m13: Expr
    m33: Expr
    realizable: Cond = ALWAYS
    extreme: Cond = ALWAYS

    def point(self, n_: int, m_: int) -> Point3:
        return Point3.of(self.m12(n_, m_), self.m13(n_, m_), self.m33(n_, m_))

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "m12": self.m12.render(),
            "m13": self.m13.render(),
            "m33": self.m33.render(),
            "realizable_condition": self.realizable.render(),
            "extreme_condition": self.extreme.render(),
        }


r = (m - 2 * n) % 4
s = (2 * n - m) % 4
p = n % 2
t = m % 3
q = (2 * m) % 3

_lift = Expr.lift


def _v(id_, a, b, c, real=ALWAYS, ext=None):
    return VertexFamily(id_, _lift(a), _lift(b), _lift(c), real, real if ext is None else ext)


_low = n.le(m)
_m_le_6n_5 = m.le(floor(6 * n / 5))
_reg_r = (5 * m).le(6 * n - 3 * r)

VERTEX_FAMILIES: tuple[VertexFamily, ...] = (
    _v("V1", 0, 0, 0, _low & _m_le_6n_5),
    _v("V2", 2, 0, 0, m.le(floor((6 * n - 8) / 5)),
       m.eq(n - 1) | (m.eq(floor((6 * n - 8) / 5)) & (m % 6).ne(0))),
    _v("V3", 0, 0, 1, m.ge(n + 1) & m.le(floor((6 * n + 1) / 5)),
       m.eq(n + 1) | (m.eq(floor((6 * n + 1) / 5)) & (m % 6).eq(5))),
    _v("V6", 0, 0, 5 * m - 6 * n, m.ge(floor((6 * n + 4) / 5))),
    _v("V7a", (6 * n - 5 * m - 3 * r) / 4, r, 0, _reg_r),
    _v("V7b", (6 * n - 5 * m + r) / 4, 0, r, m.le(floor((6 * n + 3) / 5))),
    _v("V7c", (6 * n - 5 * m - s) / 4, 0, 0, _m_le_6n_5),
    _v("V8c", 0, (3 * n - 2 * m - p) / 2, (4 * m - 3 * n - 3 * p) / 2),
    _v("V8d", 1, (3 * n - 2 * m - 3) / 2, (4 * m - 3 * n - 1) / 2, p.eq(1)),
    _v("V9a", 3 * m - 3 * n - 2, 3 * m - 3 * n - 2, 6 * m - 6 * n - 1,
       m.ge(n + 1) & m.le(floor((21 * n + 13) / 20)), m.eq(n + 1)),
    _v("V9b", 3 * m - 3 * n - 1, 0, 6 * m - 6 * n - 1,
       m.ge(n + 1) & m.le(floor((12 * n + 3) / 11)),
       m.eq(n + 1) | (m.eq(floor((12 * n + 3) / 11)) & (m % 12).isin({9, 10, 11}))),
    _v("V9c", 0, 3 * m - 3 * n - 2, 6 * m - 6 * n - 3,
       m.ge(n + 1) & m.le(floor((9 * n + 3) / 8)),
       m.eq(n + 1) | (m.eq(floor((9 * n + 3) / 8)) & (m % 9).eq(6))),
    _v("V10a", 0, (6 * n - 5 * m - t) / 3, 0, _m_le_6n_5),
    _v("V10b", t, (6 * n - 5 * m - 4 * t) / 3, 0, _reg_r),
    _v("V10c", 0, (6 * n - 5 * m + q) / 3, q, m.le(floor((6 * n + 2) / 5))),
    _v("V11a", (3 * n - 2 * m - t) / 3, 0, (7 * m - 6 * n - 4 * t) / 3),
    _v("V11b", (3 * n - 2 * m - 2 * q) / 3, q, (7 * m - 6 * n + q) / 3),
    _v("V11c", (3 * n - 2 * m - t) / 3, 0, (7 * m - 6 * n - t) / 3),
    _v("V12a", 0, 3 * n - 3 * m + 1, 0, m.le(n), m.eq(n - 1)),
    _v("V12b", 0, 0, 3 * m - 3 * n - 1, m.ge(n + 2)),
    _v("V12c", 1, 0, 3 * m - 3 * n + 1, m.ge(n + 2)),
)

VERTEX_BY_ID = {v.id: v for v in VERTEX_FAMILIES}
VERTEX_IDS = tuple(v.id for v in VERTEX_FAMILIES)


def vertex_family(vid: str) -> VertexFamily:
    try:
        return VERTEX_BY_ID[vid]
    except KeyError:
        raise UnknownFamily(f"unknown vertex family {vid!r}") from None


def evaluate_vertex(vid: str, ns: OrderSize, check: bool = True) -> Point3:
    fam = vertex_family(vid)
    if check and not (ns.in_general_regime() and fam.realizable.holds(ns.n, ns.m)):
        raise ConditionViolated(
            f"{vid} is not realizable at (n,m)=({ns.n},{ns.m}): needs {fam.realizable.render()} "
            "within max(12, n-1) <= m <= floor((3n-3)/2)")
    pt = fam.point(ns.n, ns.m)
    if not pt.is_integral():
        raise NonInteger(f"{vid} evaluates to non-integer {pt.render()} at ({ns.n},{ns.m})")
    return pt


def candidate_vertices(ns: OrderSize) -> list[tuple[str, Point3]]:
    """Families that are extreme points at (n, m), in catalog order."""
    return [(f.id, evaluate_vertex(f.id, ns, check=False))
            for f in VERTEX_FAMILIES if f.extreme.holds(ns.n, ns.m)]


def group_by_point(cands: list[tuple[str, Point3]]) -> dict[tuple, list[str]]:
    out: dict[tuple, list[str]] = {}
    for vid, pt in cands:
        out.setdefault(tuple(pt), []).append(vid)
    return out
