"""Optimize degree-based topological indices over the polytope.

On fixed (n, m) an index sum c_ij m_ij equals a linear form in (m12, m13, m33)
plus a constant, so its extreme values are attained at polytope vertices.  All
integer realizable points of the optimal face are reported as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from .core import IndexSpec, OrderSize, Point3, ReducedIndex, reduce_index
from .engine import build_polytope
from .expr import Expr
from .realizability import check_point
from .vertices import VERTEX_FAMILIES

TIE_TOLERANCE = 1e-9
# bounding boxes larger than this are not scanned for lattice points
MAX_SCAN = 2_000_000


REGISTRY: dict[str, IndexSpec] = {}


def register(idx: IndexSpec) -> IndexSpec:
    if idx.name in REGISTRY:
        raise ValueError(f"index {idx.name!r} already registered")
    REGISTRY[idx.name] = idx
    return idx


register(IndexSpec.from_function("randic", lambda i, j: 1 / math.sqrt(i * j), "1/sqrt(ij)"))
register(IndexSpec.from_function("albertson", lambda i, j: abs(i - j), "|i-j|"))
register(IndexSpec.from_function("zagreb1", lambda i, j: i + j, "i+j"))
register(IndexSpec.from_function("zagreb2", lambda i, j: i * j, "ij"))
register(IndexSpec.from_function("harmonic", lambda i, j: Fraction(2, i + j), "2/(i+j)"))
register(IndexSpec.from_function("sum-connectivity", lambda i, j: 1 / math.sqrt(i + j),
                                 "1/sqrt(i+j)"))
register(IndexSpec.from_function("abc", lambda i, j: math.sqrt((i + j - 2) / (i * j)),
                                 "sqrt((i+j-2)/(ij))"))
register(IndexSpec.from_function("ga", lambda i, j: 2 * math.sqrt(i * j) / (i + j),
                                 "2sqrt(ij)/(i+j)"))


def get_index(name: str) -> IndexSpec:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown index {name!r}; known: {', '.join(sorted(REGISTRY))}") from None


def custom_index(coeffs, name: str = "custom") -> IndexSpec:
    vals = []
    for c in coeffs:
        if isinstance(c, str):
            c = Fraction(c) if "." not in c and "e" not in c.lower() else float(c)
        vals.append(c)
    if len(vals) != 5:
        raise ValueError("need five coefficients c12,c13,c22,c23,c33")
    return IndexSpec(name, *vals)


@dataclass
class OptimizationResult:
    order_size: OrderSize
    index: IndexSpec
    direction: str
    optimal_value: object
    reduced_value: object
    optimal_vertices: list[tuple[Point3, tuple[str, ...]]]
    optimal_lattice_points: list[Point3]
    lattice_complete: bool = True
    witnesses: Optional[dict] = None
    exact: bool = True

    def as_dict(self) -> dict:
        def num(x):
            if isinstance(x, Fraction):
                return int(x) if x.denominator == 1 else str(x)
            return x

        out = {
            "n": self.order_size.n,
            "m": self.order_size.m,
            "index": self.index.name,
            "direction": self.direction,
            "exact": self.exact,
            "optimal_value": num(self.optimal_value),
            "reduced_value": num(self.reduced_value),
            "optimal_vertices": [{"point": [int(c) for c in p], "families": list(f)}
                                 for p, f in self.optimal_vertices],
            "optimal_lattice_points": [[int(c) for c in p] for p in self.optimal_lattice_points],
            "lattice_complete": self.lattice_complete,
        }
        if self.witnesses is not None:
            out["witnesses"] = {",".join(str(int(c)) for c in p): g.to_graph6()
                                for p, g in self.witnesses.items()}
        return out


def _coerce(red: ReducedIndex, exact: bool) -> ReducedIndex:
    if exact:
        return ReducedIndex(*(Fraction(c) for c in (red.cp12, red.cp13, red.cp33,
                                                     red.constant_n_coeff, red.constant_m_coeff)))
    return ReducedIndex(*(float(c) for c in (red.cp12, red.cp13, red.cp33,
                                              red.constant_n_coeff, red.constant_m_coeff)))


def optimize(ns: OrderSize, idx: IndexSpec, direction: str = "min",
             witnesses: bool = False) -> OptimizationResult:
    if direction not in ("min", "max"):
        raise ValueError("direction must be 'min' or 'max'")
    exact = idx.is_exact()
    red = _coerce(reduce_index(idx), exact)
    desc = build_polytope(ns)
    sign = 1 if direction == "min" else -1
    values = [(red.linear(v.point), v) for v in desc.vertices]
    best = min(sign * val for val, _ in values) * sign

    def attains(val) -> bool:
        return val == best if exact else abs(val - best) <= TIE_TOLERANCE

    opt_vertices = [(v.point, v.families) for val, v in values if attains(val)]
    lattice, complete = _face_lattice_points(ns, desc, red, [p for p, _ in opt_vertices], attains)
    result = OptimizationResult(ns, idx, direction, best + red.constant(ns.n, ns.m), best,
                                opt_vertices, lattice, complete, None, exact)
    if witnesses:
        from .builder import build_witness

        result.witnesses = {p: build_witness(ns, p) for p in lattice}
    return result


def _face_lattice_points(ns, desc, red, opt_points, attains):
    # the optimal face is the hull of the optimal vertices, so their box bounds it
    lo = [min(int(p[i]) for p in opt_points) for i in range(3)]
    hi = [max(int(p[i]) for p in opt_points) for i in range(3)]
    volume = math.prod(h - l + 1 for l, h in zip(lo, hi))
    if volume > MAX_SCAN:
        return sorted(Point3.of(p) for p in opt_points), False
    out = []
    for p in product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        if desc.contains(p) and attains(red.linear(p)) and check_point(ns, p).realizable:
            out.append(Point3.of(p))
    return sorted(out), True


def symbolic_vertex_values(idx: IndexSpec) -> dict[str, Expr]:
    """Reduced functional at each candidate family, as a formula in n, m and residues."""
    red = reduce_index(idx)
    coeffs = [Fraction(c) for c in (red.cp12, red.cp13, red.cp33)]
    return {v.id: coeffs[0] * v.m12 + coeffs[1] * v.m13 + coeffs[2] * v.m33
            for v in VERTEX_FAMILIES}
