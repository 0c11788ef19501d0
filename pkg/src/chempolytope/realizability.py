"""Decide whether an edge-type triple is realized by some chemical graph.

The test derives the remaining counts and checks the feasibility conditions
C10..C16 on (m22, m23, m33, n2, n3).  These are known to be necessary and
sufficient; the oracle tests confirm it exhaustively for n <= 10.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import DegreeCounts, EdgeTypeVector, OrderSize, derived_counts


def delta(x: int) -> int:
    return 1 if x >= 1 else 0


@dataclass(frozen=True)
class RealizabilityVerdict:
    realizable: bool
    full_vector: Optional[EdgeTypeVector] = None
    degree_counts: Optional[DegreeCounts] = None
    failed_conditions: tuple[str, ...] = ()
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "realizable": self.realizable,
            "full_vector": self.full_vector.as_dict() if self.full_vector else None,
            "degree_counts": self.degree_counts.as_dict() if self.degree_counts else None,
            "failed_conditions": list(self.failed_conditions),
            "detail": self.detail,
        }


def check_point(ns: OrderSize, p) -> RealizabilityVerdict:
    n, m = ns.n, ns.m
    coords = [Fraction(c) for c in p]
    if any(c.denominator != 1 for c in coords):
        return RealizabilityVerdict(False, failed_conditions=("NONINT",),
                                    detail="fractional coordinate")
    m12, m13, m33 = (int(c) for c in coords)
    m22, m23 = derived_counts(n, m, m12, m13, m33)
    negatives = [name for name, v in (("m12", m12), ("m13", m13), ("m33", m33),
                                      ("m22", m22), ("m23", m23)) if v < 0]
    if negatives:
        return RealizabilityVerdict(False, failed_conditions=("NEG",),
                                    detail="negative " + ",".join(negatives))
    vec = EdgeTypeVector(m12, m13, m22, m23, m33)
    two_n2 = m12 + 2 * m22 + m23
    three_n3 = m13 + m23 + 2 * m33
    if two_n2 % 2 or three_n3 % 3:
        return RealizabilityVerdict(False, vec, failed_conditions=("NONINT",),
                                    detail="fractional degree count")
    n1, n2, n3 = m12 + m13, two_n2 // 2, three_n3 // 3
    counts = DegreeCounts(n1, n2, n3)
    # n1 + n2 + n3 = n follows from the edge identities, but stay defensive
    failed = []
    if n1 + n2 + n3 != n:
        failed.append("SUM")
    if n3 in (1, 2, 3) and m33 > n3 * (n3 - 1) // 2:
        failed.append("C10")
    if n2 in (1, 2) and m22 > n2 * (n2 - 1) // 2:
        failed.append("C11")
    if n2 in (1, 2) and n3 == 1 and m23 > n2 * n3:
        failed.append("C12")
    if m23 < delta(n2) + delta(n3) - 1:
        failed.append("C13")
    if m23 + m33 < n3 + delta(n2) - 1:
        failed.append("C14")
    if m22 + m23 < n2 + delta(n3) - 1:
        failed.append("C15")
    if m22 + m23 + m33 < n2 + n3 - 1:
        failed.append("C16")
    return RealizabilityVerdict(not failed, vec, counts, tuple(failed))


def is_realizable(ns: OrderSize, p) -> bool:
    return check_point(ns, p).realizable


def realizable_points_in_box(ns: OrderSize, bound: Optional[int] = None) -> set[tuple]:
    """All integer triples in [0, bound]^3 accepted by check_point (bound defaults to 3n)."""
    bound = 3 * ns.n if bound is None else bound
    out = set()
    for a in range(bound + 1):
        for b in range(bound + 1):
            # m22 >= 0 gives m33 >= 4a + 3b + 5m - 6n; m23 >= 0 bounds m33 above
            lo = max(0, 4 * a + 3 * b + 5 * ns.m - 6 * ns.n)
            hi = min(bound, (6 * ns.m - 6 * ns.n + 3 * a + 2 * b) // 2)
            for c in range(lo, hi + 1):
                if check_point(ns, (a, b, c)).realizable:
                    out.add((a, b, c))
    return out
