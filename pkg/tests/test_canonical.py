from __future__ import annotations

import random

import pytest

from knot21.canonical import (MAX_VERTICES, canonical_form, canonical_graph, canonical_labeling,
                              is_isomorphic)
from knot21.catalog import get
from knot21.graph import Graph, GraphError, complete_bipartite, cycle_graph, random_graph

from support import brute_isomorphic, shuffled


def _same_degrees(g: Graph, rng: random.Random, swaps: int = 20) -> Graph:
    """Degree-preserving double-edge swaps: hard non-isomorphic partners."""
    edges = [tuple(e) for e in g.edges]
    present = {frozenset(e) for e in edges}
    for _ in range(swaps):
        if len(edges) < 2:
            break
        i, j = rng.sample(range(len(edges)), 2)
        (a, b), (c, d) = edges[i], edges[j]
        if len({a, b, c, d}) < 4 or frozenset((a, d)) in present or frozenset((c, b)) in present:
            continue
        present -= {frozenset((a, b)), frozenset((c, d))}
        present |= {frozenset((a, d)), frozenset((c, b))}
        edges[i], edges[j] = (a, d), (c, b)
    return Graph(g.vertices, edges)


def test_against_brute_force_on_ten_thousand_pairs():
    rng = random.Random(2024)
    agree = 0
    for k in range(10_000):
        g = random_graph(rng.randint(1, 8), rng.choice([0.2, 0.4, 0.5, 0.7]), rng)
        h = shuffled(g, rng) if k % 2 else shuffled(_same_degrees(g, rng), rng)
        expected = brute_isomorphic(g, h)
        assert (canonical_form(g) == canonical_form(h)) == expected, (g, h)
        assert is_isomorphic(g, h) == expected
        agree += 1
    assert agree == 10_000


def test_invariant_under_relabelling_of_larger_graphs():
    rng = random.Random(7)
    for name in ("Petersen", "H12", "C14"):
        g = get(name).graph
        code = canonical_form(g)
        for _ in range(20):
            assert canonical_form(shuffled(g, rng)) == code


def test_multiplicities_are_part_of_the_code():
    a = Graph.from_multiplicities(range(3), [(0, 1, 2), (1, 2, 1)], multi=True)
    b = Graph.from_multiplicities(range(3), [(0, 1, 1), (1, 2, 2)], multi=True)
    c = Graph.from_multiplicities(range(3), [(0, 1, 1), (1, 2, 1), (0, 2, 1)], multi=True)
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(a) != canonical_form(c)


def test_orbits():
    code, order, orbit = canonical_labeling(complete_bipartite(2, 3))
    assert sorted(order) == list(range(5))
    assert orbit[0] == orbit[1] and orbit[2] == orbit[3] == orbit[4]
    assert orbit[0] != orbit[2]
    assert len(set(canonical_labeling(get("Petersen").graph)[2].values())) == 1


def test_canonical_graph_is_a_fixed_point():
    g = shuffled(get("H12").graph, random.Random(1))
    c = canonical_graph(g)
    assert c.vertices == tuple(range(12))
    assert canonical_graph(c) == c


def test_small_and_distinct():
    assert canonical_form(Graph()) != canonical_form(Graph([0]))
    assert not is_isomorphic(cycle_graph(6), Graph(range(6), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_size_limit():
    with pytest.raises(GraphError):
        canonical_form(Graph(range(MAX_VERTICES + 1)))
