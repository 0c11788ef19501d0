import json

from hypothesis import given, settings
from hypothesis import strategies as st

from chempolytope.builder import build_witness
from chempolytope.core import OrderSize, reduce_index
from chempolytope.engine import build_polytope
from chempolytope.facets import active_facets
from chempolytope.graphs import ChemicalGraph
from chempolytope.optimize import custom_index, optimize
from chempolytope.realizability import check_point


@st.composite
def order_sizes(draw, max_n=120):
    n = draw(st.integers(3, max_n))
    m = draw(st.integers(n - 1, min(3 * n // 2, n * (n - 1) // 2)))
    return OrderSize(n, m)


@st.composite
def general_order_sizes(draw, max_n=120):
    n = draw(st.integers(13, max_n))
    m = draw(st.integers(max(12, n - 1), (3 * n - 3) // 2))
    return OrderSize(n, m)


@settings(max_examples=60, deadline=None)
@given(order_sizes())
def test_vertices_satisfy_every_inequality(ns):
    d = build_polytope(ns)
    for v in d.vertices:
        assert d.contains(v.point)
        assert check_point(ns, v.point).realizable


@settings(max_examples=40, deadline=None)
@given(general_order_sizes(), st.data())
def test_vertices_are_built(ns, data):
    d = build_polytope(ns)
    v = data.draw(st.sampled_from(d.vertices))
    g = build_witness(ns, v.point)
    assert (g.n, g.m, tuple(g.point())) == (ns.n, ns.m, tuple(v.point))


@settings(max_examples=40, deadline=None)
@given(general_order_sizes(), st.tuples(*[st.integers(0, 40)] * 3))
def test_realizable_points_lie_inside(ns, p):
    if check_point(ns, p).realizable:
        assert all(f.holds(p) for f in active_facets(ns))


@settings(max_examples=40, deadline=None)
@given(general_order_sizes(), st.lists(st.integers(-5, 5), min_size=5, max_size=5))
def test_optimum_is_attained_at_a_vertex(ns, coeffs):
    idx = custom_index(coeffs)
    res = optimize(ns, idx, "min")
    d = build_polytope(ns)
    red = reduce_index(idx)
    assert res.reduced_value == min(red.linear(v.point) for v in d.vertices)
    for p in res.optimal_lattice_points:
        assert red.linear(p) == res.reduced_value


@settings(max_examples=40, deadline=None)
@given(order_sizes(max_n=60))
def test_polytope_json_round_trip(ns):
    d = build_polytope(ns).as_dict()
    assert json.loads(json.dumps(d)) == d


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 40), st.randoms(use_true_random=False))
def test_graph6_round_trip(n, rnd):
    # random spanning tree plus a few extra edges, kept subcubic
    edges = set()
    deg = [0] * n
    for v in range(1, n):
        choices = [u for u in range(v) if deg[u] < 3]
        u = rnd.choice(choices)
        edges.add((u, v))
        deg[u] += 1
        deg[v] += 1
    for _ in range(n):
        u, v = sorted(rnd.sample(range(n), 2))
        if (u, v) not in edges and deg[u] < 3 and deg[v] < 3:
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
    g = ChemicalGraph.from_edges(n, edges)
    assert ChemicalGraph.from_graph6(g.to_graph6()) == g
