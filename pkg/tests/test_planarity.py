from __future__ import annotations

import random

import networkx as nx
import pytest

from knot21.catalog import get, k7_family
from knot21.graph import Graph, complete_bipartite, complete_graph, cycle_graph, random_graph
from knot21.planarity import (ApexKind, KuratowskiCertificate, apex_witness, find_kuratowski,
                              is_homeomorphic_k33, is_planar, verify_apex_witness,
                              verify_kuratowski)


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


@pytest.mark.parametrize("name, planar", [("K4", True), ("K5", False), ("K33", False),
                                          ("Petersen", False), ("K6", False)])
def test_named(name, planar):
    assert is_planar(get(name).graph) is planar


def test_small_and_disconnected():
    assert is_planar(Graph())
    assert is_planar(cycle_graph(10))
    two = Graph(range(10), [(i, j) for i in range(5) for j in range(i + 1, 5)] + [(5, 6)])
    assert not is_planar(two)


def test_agrees_with_networkx():
    rng = random.Random(11)
    for _ in range(1500):
        g = random_graph(rng.randint(1, 13), rng.uniform(0.1, 0.6), rng)
        assert is_planar(g) == nx.check_planarity(_nx(g))[0]


def test_certificates_are_valid_and_found_exactly_when_non_planar():
    rng = random.Random(12)
    for _ in range(1500):
        g = random_graph(rng.randint(5, 12), rng.uniform(0.2, 0.7), rng)
        cert = find_kuratowski(g)
        assert (cert is None) == is_planar(g)
        if cert is not None:
            assert verify_kuratowski(g, cert)


def test_verify_rejects_tampered_certificates():
    g = complete_bipartite(3, 3)
    cert = find_kuratowski(g)
    assert cert.kind == "K33"
    assert not verify_kuratowski(g, KuratowskiCertificate("K5", cert.branch, cert.paths))
    assert not verify_kuratowski(g, KuratowskiCertificate("K33", cert.branch, cert.paths[:-1]))
    bad_paths = (cert.paths[0] + (cert.paths[0][0],),) + cert.paths[1:]
    assert not verify_kuratowski(g, KuratowskiCertificate("K33", cert.branch, bad_paths))


def test_k5_certificate_through_subdivision():
    edges = []
    nxt = 5
    for u in range(5):
        for v in range(u + 1, 5):
            edges += [(u, nxt), (nxt, v)]
            nxt += 1
    g = Graph(range(nxt), edges)
    cert = find_kuratowski(g)
    assert cert.kind == "K5" and sorted(cert.branch) == [0, 1, 2, 3, 4]
    assert all(len(p) == 3 for p in cert.paths)


def test_k33_homeomorphism():
    assert is_homeomorphic_k33(complete_bipartite(3, 3))
    sub = Graph(range(7), [(0, 6), (6, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
    assert is_homeomorphic_k33(sub)
    assert not is_homeomorphic_k33(complete_graph(5))
    assert not is_homeomorphic_k33(get("Petersen").graph)
    prism = Graph(range(6), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    assert not is_homeomorphic_k33(prism)


def test_apex_levels():
    assert apex_witness(cycle_graph(5)).kind is ApexKind.PLANAR
    w = apex_witness(complete_graph(5))
    assert w.kind is ApexKind.ONE_APEX and w.vertices == (0,)
    w = apex_witness(complete_graph(6))
    assert w.kind is ApexKind.TWO_APEX and w.vertices == (0, 1)
    assert verify_apex_witness(complete_graph(6), w)
    assert apex_witness(complete_graph(7)).label == "not-2-apex"
    assert apex_witness(complete_graph(6), 1).label == "not-1-apex"


def test_k7_family_not_two_apex():
    for member in k7_family():
        assert not apex_witness(member.graph).is_apex, member.name


def test_apex_bad_k():
    with pytest.raises(ValueError):
        apex_witness(complete_graph(4), 3)
