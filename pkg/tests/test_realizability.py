import pytest

from chempolytope.core import OrderSize
from chempolytope.realizability import check_point, delta, is_realizable, realizable_points_in_box


def test_delta():
    assert [delta(x) for x in (0, 1, 5)] == [0, 1, 1]


@pytest.mark.parametrize("p", [(0, 0, 0), (0, 0, 5), (1, 0, 7), (3, 0, 9)])
def test_section_vertices_realizable(p):
    assert is_realizable(OrderSize(13, 15), p)


def test_negative_derived():
    v = check_point(OrderSize(13, 15), (9, 9, 9))
    assert v.failed_conditions == ("NEG",)
    assert "m22" in v.detail


def test_fractional_coordinate():
    from fractions import Fraction
    v = check_point(OrderSize(13, 15), (Fraction(1, 2), 0, 0))
    assert v.failed_conditions == ("NONINT",)


def test_degree_counts_follow_from_edge_identities():
    # 2 n2 = 6n - 4m - 4 n1 and 3 n3 = 6m - 6n + 3 n1 for every integer point
    ns = OrderSize(13, 15)
    for p in [(0, 0, 1), (0, 1, 1), (0, 0, 5)]:
        dc = check_point(ns, p).degree_counts
        assert 2 * dc.n2 == 6 * ns.n - 4 * ns.m - 4 * dc.n1
        assert 3 * dc.n3 == 6 * ns.m - 6 * ns.n + 3 * dc.n1


def test_connectivity_conditions_fire():
    # (4,3) star K_{1,3}: n3 = 1 and three 13-edges; (0,0,0) would need a cycle
    assert check_point(OrderSize(4, 3), (0, 3, 0)).realizable
    v = check_point(OrderSize(6, 6), (0, 0, 6))
    assert not v.realizable


def test_verdict_as_dict():
    d = check_point(OrderSize(13, 15), (0, 0, 5)).as_dict()
    assert d["realizable"] is True
    assert d["full_vector"] == {"m12": 0, "m13": 0, "m22": 8, "m23": 2, "m33": 5}
    assert d["degree_counts"] == {"n1": 0, "n2": 9, "n3": 4}


def test_box_scan_small():
    assert realizable_points_in_box(OrderSize(3, 2)) == {(2, 0, 0)}
    assert realizable_points_in_box(OrderSize(4, 3)) == {(0, 3, 0), (2, 0, 0)}
