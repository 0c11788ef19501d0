from fractions import Fraction

import pytest

from chempolytope.core import (EdgeTypeVector, IndexSpec, InvalidOrderSize, NegativeDerived,
                               NonInteger, OrderSize, Point3, derive_degree_counts,
                               derive_full_vector, derived_counts, in_general_regime,
                               reduce_index)


@pytest.mark.parametrize("n,m", [(3, 2), (3, 3), (4, 6), (13, 15), (200, 298)])
def test_valid_pairs(n, m):
    assert OrderSize(n, m).m == m
    assert OrderSize.is_valid(n, m)


@pytest.mark.parametrize("n,m", [(2, 1), (3, 4), (4, 2), (5, 8), (10, 16)])
def test_invalid_pairs_echo_bound(n, m):
    with pytest.raises(InvalidOrderSize) as exc:
        OrderSize(n, m)
    assert "n-1 <= m" in str(exc.value) or "n >= 3" in str(exc.value)
    assert exc.value.code == "INVALID_ORDER_SIZE"


def test_all_valid_counts():
    pairs = list(OrderSize.all_valid(10))
    assert len(pairs) == 39
    assert pairs[0] == OrderSize(3, 2)


def test_general_regime_boundaries():
    assert in_general_regime(13, 12)
    assert not in_general_regime(12, 11)
    assert in_general_regime(13, 18)
    assert not in_general_regime(13, 19)


def test_full_vector_and_degrees_for_section_example():
    ns = OrderSize(13, 15)
    v = derive_full_vector(ns, (1, 0, 7))
    assert v == EdgeTypeVector(1, 0, 6, 1, 7)
    dc = derive_degree_counts(ns, v)
    assert (dc.n1, dc.n2, dc.n3) == (1, 7, 5)


def test_negative_derived_is_reported():
    with pytest.raises(NegativeDerived) as exc:
        derive_full_vector(OrderSize(13, 15), (9, 9, 9))
    assert exc.value.code == "NEG"


def test_fractional_point_rejected():
    with pytest.raises(NonInteger) as exc:
        derive_full_vector(OrderSize(13, 15), (Fraction(1, 2), 0, 0))
    assert exc.value.code == "NONINT"


def test_derived_counts_identity():
    # total edges and handshake identity
    n, m = 20, 25
    for p in [(0, 0, 5), (2, 1, 4), (3, 3, 3)]:
        m22, m23 = derived_counts(n, m, *p)
        assert p[0] + p[1] + p[2] + m22 + m23 == m


def test_point_normalizes():
    p = Point3.of(Fraction(4, 2), 0, 1)
    assert p == (2, 0, 1) and isinstance(p.m12, int)
    assert p.render() == "(2,0,1)"
    assert not Point3.of(Fraction(1, 2), 0, 0).is_integral()


def test_reduced_index_matches_full_evaluation():
    idx = IndexSpec("x", 2, 3, 5, 7, 11)
    red = reduce_index(idx)
    ns = OrderSize(20, 25)
    for p in [(0, 0, 5), (1, 0, 9), (0, 1, 8)]:
        v = derive_full_vector(ns, p)
        assert red.value(ns.n, ns.m, p) == idx.evaluate(v)


def test_index_rejects_non_finite():
    with pytest.raises(ValueError):
        IndexSpec("bad", float("nan"), 0, 0, 0, 0)
