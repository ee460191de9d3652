from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from knot21.canonical import canonical_form
from knot21.graph import (INFINITY, Graph, GraphError, MissingEdgeError, UnknownVertexError,
                          complete_bipartite, complete_graph, components, contract, cycle_graph,
                          delete_vertices, diameter, dist, girth, has_bigon, is_connected,
                          is_triangle_free, path_graph, random_graph, suppress_reducible,
                          triangles)

from support import brute_triangles


def test_construction_and_accessors():
    g = Graph([0, 1, 2, 5], [(0, 1), (1, 2)])
    assert g.n == 4 and g.m == 2
    assert g.vertices == (0, 1, 2, 5)
    assert g.degree(1) == 2 and g.degree(5) == 0
    assert g.neighbors(1) == (0, 2)
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)
    assert 5 in g and 7 not in g


def test_loops_and_parallel_edges_rejected_in_simple_mode():
    with pytest.raises(GraphError):
        Graph([0], [(0, 0)])
    with pytest.raises(GraphError):
        Graph([0, 1], [(0, 1), (1, 0)])
    m = Graph([0, 1], [(0, 1), (1, 0)], multi=True)
    assert m.m == 2 and m.multiplicity(0, 1) == 2 and has_bigon(m)


def test_unknown_vertex():
    with pytest.raises(UnknownVertexError):
        complete_graph(3).degree(9)


def test_value_semantics():
    a = Graph(range(3), [(0, 1), (1, 2)])
    b = Graph(range(3), [(2, 1), (1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != a.as_multi()


def test_distances():
    p = path_graph(5)
    assert dist(p, 0, 4) == 4
    assert diameter(cycle_graph(7)) == 3
    g = Graph(range(4), [(0, 1)])
    assert dist(g, 0, 3) == INFINITY
    assert not is_connected(g)
    assert sorted(map(sorted, components(g))) == [[0, 1], [2], [3]]


def test_girth_and_triangles():
    assert girth(complete_bipartite(3, 3)) == 4
    assert girth(cycle_graph(9)) == 9
    assert girth(path_graph(4)) == INFINITY
    assert is_triangle_free(complete_bipartite(3, 4))
    assert len(triangles(complete_graph(5))) == 10


def test_triangles_match_brute_force():
    rng = random.Random(3)
    for _ in range(300):
        g = random_graph(rng.randint(3, 10), rng.random(), rng)
        assert {frozenset(t) for t in triangles(g)} == brute_triangles(g)
        assert is_triangle_free(g) == (not brute_triangles(g))


def test_contract_keeps_higher_degree_endpoint():
    g = Graph(range(4), [(0, 1), (1, 2), (1, 3)])
    c = contract(g, 0, 1)
    assert c.kept == 1 and c.removed == 0
    assert c.graph.m == 2


def test_contract_multi_makes_parallel_and_loops():
    tri = cycle_graph(3).as_multi()
    c = contract(tri, 0, 1)
    assert c.graph.multiplicity(0, 2) == 2 and c.loops == 0
    c2 = contract(c.graph, 0, 2)
    assert c2.loops == 1 and c2.graph.m == 0


def test_contract_missing_edge():
    with pytest.raises(MissingEdgeError):
        contract(path_graph(3), 0, 2)


def test_suppress_cycle_vanishes_and_k4_is_kept():
    assert suppress_reducible(cycle_graph(6)).n == 0
    k4 = complete_graph(4)
    assert suppress_reducible(k4) == k4.as_multi()


def test_suppress_subdivided_k33_gives_k33():
    edges = []
    nxt = 6
    for u in range(3):
        for v in range(3, 6):
            edges += [(u, nxt), (nxt, v)]
            nxt += 1
    out = suppress_reducible(Graph(range(nxt), edges))
    assert out.n == 6 and out.m == 9
    assert canonical_form(out) == canonical_form(complete_bipartite(3, 3).as_multi())


def test_suppress_transcript():
    log: list = []
    suppress_reducible(path_graph(3), transcript=log)
    assert log[0][0] == "contract"
    assert any(op == "delete" for op, _ in log)


def test_delete_vertices():
    g = delete_vertices(complete_graph(7), [0, 1])
    assert g == complete_graph(5).relabel({i: i + 2 for i in range(5)})


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**31), st.integers(min_value=5, max_value=11))
def test_suppression_is_order_independent(seed, n):
    rng = random.Random(seed)
    g = random_graph(n, 0.45, rng)
    base = canonical_form(suppress_reducible(g))
    for _ in range(5):
        assert canonical_form(suppress_reducible(g, rng=rng)) == base
