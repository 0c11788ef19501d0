"""Shared domain types and the counting identities for chemical graphs.

A chemical graph here is a connected simple graph with maximum degree at most 3.
For fixed order ``n`` and size ``m`` the five edge-type counts are determined by
the triple (m12, m13, m33); everything else follows from degree bookkeeping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

Rational = Union[int, Fraction]


class ChemPolytopeError(Exception):
    """Base class; ``code`` is the machine-readable tag surfaced by the CLI."""

    code = "ERROR"


class InvalidOrderSize(ChemPolytopeError, ValueError):
    code = "INVALID_ORDER_SIZE"


class NonInteger(ChemPolytopeError, ValueError):
    code = "NONINT"


class NegativeDerived(ChemPolytopeError, ValueError):
    code = "NEG"


class NonIntegerDegreeCount(ChemPolytopeError, ValueError):
    code = "NONINT_DEGREE"


class SumMismatch(ChemPolytopeError, ValueError):
    code = "SUM_MISMATCH"


def bounds_message(n: int) -> str:
    hi = min(3 * n // 2, n * (n - 1) // 2)
    return f"need n >= 3 and n-1 <= m <= min(floor(3n/2), n(n-1)/2); for n={n} that is {n - 1} <= m <= {hi}"


@dataclass(frozen=True, order=True)
class OrderSize:
    n: int
    m: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.m, int):
            raise InvalidOrderSize(f"n and m must be integers, got ({self.n!r}, {self.m!r})")
        if self.n < 3:
            raise InvalidOrderSize(f"order n={self.n} too small: need n >= 3")
        lo, hi = self.n - 1, min(3 * self.n // 2, self.n * (self.n - 1) // 2)
        if not lo <= self.m <= hi:
            raise InvalidOrderSize(f"invalid size m={self.m} for n={self.n}: {bounds_message(self.n)}")

    @staticmethod
    def is_valid(n: int, m: int) -> bool:
        return n >= 3 and n - 1 <= m <= min(3 * n // 2, n * (n - 1) // 2)

    @staticmethod
    def all_valid(max_n: int, min_n: int = 3):
        for n in range(min_n, max_n + 1):
            for m in range(n - 1, min(3 * n // 2, n * (n - 1) // 2) + 1):
                yield OrderSize(n, m)

    def in_general_regime(self) -> bool:
        return in_general_regime(self.n, self.m)


def in_general_regime(n: int, m: int) -> bool:
    """max(12, n-1) <= m <= floor((3n-3)/2): full-dimensional with catalogued facets."""
    return max(12, n - 1) <= m <= (3 * n - 3) // 2


class Point3(NamedTuple):
    m12: Rational
    m13: Rational
    m33: Rational

    @classmethod
    def of(cls, *coords) -> "Point3":
        if len(coords) == 1:
            coords = tuple(coords[0])
        return cls(*(_normalize(c) for c in coords))

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self)

    def as_ints(self) -> tuple[int, int, int]:
        if not self.is_integral():
            raise NonInteger(f"point {self.render()} has a fractional component")
        return tuple(int(c) for c in self)  # type: ignore[return-value]

    def render(self) -> str:
        return "(" + ",".join(str(c) for c in self) + ")"


def _normalize(c) -> Rational:
    f = Fraction(c)
    return int(f) if f.denominator == 1 else f


@dataclass(frozen=True)
class EdgeTypeVector:
    m12: int
    m13: int
    m22: int
    m23: int
    m33: int

    def __post_init__(self):
        for name in ("m12", "m13", "m22", "m23", "m33"):
            if getattr(self, name) < 0:
                raise NegativeDerived(f"{name}={getattr(self, name)} is negative")

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("m12", "m13", "m22", "m23", "m33")}

    def point(self) -> Point3:
        return Point3(self.m12, self.m13, self.m33)


@dataclass(frozen=True)
class DegreeCounts:
    n1: int
    n2: int
    n3: int

    def as_dict(self) -> dict:
        return {"n1": self.n1, "n2": self.n2, "n3": self.n3}


def derived_counts(n: int, m: int, m12: Rational, m13: Rational, m33: Rational):
    """Return (m22, m23) without any validation."""
    m22 = 6 * n - 5 * m - 4 * m12 - 3 * m13 + m33
    m23 = 6 * m - 6 * n + 3 * m12 + 2 * m13 - 2 * m33
    return m22, m23


def derive_full_vector(ns: OrderSize, p) -> EdgeTypeVector:
    p = Point3.of(p)
    m12, m13, m33 = p.as_ints()
    m22, m23 = derived_counts(ns.n, ns.m, m12, m13, m33)
    if m22 < 0:
        raise NegativeDerived(f"m22={m22} is negative at (n,m)=({ns.n},{ns.m})")
    if m23 < 0:
        raise NegativeDerived(f"m23={m23} is negative at (n,m)=({ns.n},{ns.m})")
    if min(m12, m13, m33) < 0:
        raise NegativeDerived(f"point {p.render()} has a negative coordinate")
    return EdgeTypeVector(m12, m13, m22, m23, m33)


def derive_degree_counts(ns: OrderSize, v: EdgeTypeVector) -> DegreeCounts:
    n1 = v.m12 + v.m13
    two_n2 = v.m12 + 2 * v.m22 + v.m23
    three_n3 = v.m13 + v.m23 + 2 * v.m33
    if two_n2 % 2 or three_n3 % 3:
        raise NonIntegerDegreeCount(f"n2={two_n2}/2, n3={three_n3}/3 not both integral")
    counts = DegreeCounts(n1, two_n2 // 2, three_n3 // 3)
    if n1 + counts.n2 + counts.n3 != ns.n:
        raise SumMismatch(f"n1+n2+n3={n1 + counts.n2 + counts.n3} differs from n={ns.n}")
    return counts


# -- indices -------------------------------------------------------------------

_PAIRS = ("c12", "c13", "c22", "c23", "c33")


@dataclass(frozen=True)
class IndexSpec:
    """Degree-based index sum of c_ij * m_ij; coefficients may be float or Fraction."""

    name: str
    c12: float
    c13: float
    c22: float
    c23: float
    c33: float
    description: str = ""

    def __post_init__(self):
        for k in _PAIRS:
            value = getattr(self, k)
            if isinstance(value, float) and not math.isfinite(value):
                raise ValueError(f"coefficient {k}={value} is not finite")

    @classmethod
    def from_function(cls, name: str, fn, description: str = "") -> "IndexSpec":
        return cls(name, *(fn(int(k[1]), int(k[2])) for k in _PAIRS), description=description)

    def coeffs(self) -> tuple:
        return tuple(getattr(self, k) for k in _PAIRS)

    def is_exact(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self.coeffs())

    def evaluate(self, v: EdgeTypeVector):
        return (self.c12 * v.m12 + self.c13 * v.m13 + self.c22 * v.m22
                + self.c23 * v.m23 + self.c33 * v.m33)


@dataclass(frozen=True)
class ReducedIndex:
    cp12: float
    cp13: float
    cp33: float
    constant_n_coeff: float
    constant_m_coeff: float

    def constant(self, n: int, m: int):
        return self.constant_n_coeff * n + self.constant_m_coeff * m

    def linear(self, p):
        return self.cp12 * p[0] + self.cp13 * p[1] + self.cp33 * p[2]

    def value(self, n: int, m: int, p):
        return self.linear(p) + self.constant(n, m)


def reduce_index(idx: IndexSpec) -> ReducedIndex:
    c12, c13, c22, c23, c33 = idx.coeffs()
    return ReducedIndex(
        cp12=c12 - 4 * c22 + 3 * c23,
        cp13=c13 - 3 * c22 + 2 * c23,
        cp33=c22 - 2 * c23 + c33,
        # (6n - 5m) c22 + (6m - 6n) c23
        constant_n_coeff=6 * c22 - 6 * c23,
        constant_m_coeff=-5 * c22 + 6 * c23,
    )


# -- linear constraints ------------------------------------------------------------

@dataclass(frozen=True)
class LinearEquality:
    a12: int
    a13: int
    a33: int
    rhs: int

    def holds(self, p) -> bool:
        return self.a12 * p[0] + self.a13 * p[1] + self.a33 * p[2] == self.rhs

    def as_dict(self) -> dict:
        return {"a12": self.a12, "a13": self.a13, "a33": self.a33, "rhs": self.rhs}


@dataclass(frozen=True)
class FacetInequality:
    """a12*m12 + a13*m13 + a33*m33 >= rhs."""

    id: str
    a12: int
    a13: int
    a33: int
    rhs: int

    def normal(self) -> tuple[int, int, int]:
        return (self.a12, self.a13, self.a33)

    def lhs(self, p):
        return self.a12 * p[0] + self.a13 * p[1] + self.a33 * p[2]

    def holds(self, p) -> bool:
        return self.lhs(p) >= self.rhs

    def tight(self, p) -> bool:
        return self.lhs(p) == self.rhs

    def as_dict(self) -> dict:
        return {"id": self.id, "a12": self.a12, "a13": self.a13, "a33": self.a33, "rhs": self.rhs}


@dataclass(frozen=True)
class LabeledVertex:
    point: Point3
    families: tuple[str, ...] = ()
    supports: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {"point": [_jsonable(c) for c in self.point],
                "families": list(self.families), "supports": list(self.supports)}


def _jsonable(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else str(c)


@dataclass(frozen=True)
class PolytopeDescription:
    order_size: OrderSize
    dimension: int
    regime: str
    equalities: tuple[LinearEquality, ...] = ()
    facets: tuple[FacetInequality, ...] = ()
    vertices: tuple[LabeledVertex, ...] = ()
    label: str = ""

    def points(self) -> list[Point3]:
        return [v.point for v in self.vertices]

    def point_set(self) -> set[tuple]:
        return {tuple(v.point) for v in self.vertices}

    def facet_ids(self) -> list[str]:
        return [f.id for f in self.facets]

    def contains(self, p) -> bool:
        return all(e.holds(p) for e in self.equalities) and all(f.holds(p) for f in self.facets)

    def as_dict(self) -> dict:
        out = {
            "n": self.order_size.n,
            "m": self.order_size.m,
            "dimension": self.dimension,
            "regime": self.regime,
            "equalities": [e.as_dict() for e in self.equalities],
            "facets": [f.as_dict() for f in self.facets],
            "vertices": [v.as_dict() for v in self.vertices],
        }
        if self.label:
            out["label"] = self.label
        return out
