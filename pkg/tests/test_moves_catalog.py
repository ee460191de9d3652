from __future__ import annotations

import pytest

from knot21.canonical import canonical_form, is_isomorphic
from knot21.catalog import (NAMES, CatalogError, get, hc_family, k7_family, lookup,
                            match_family)
from knot21.formats import read_graphs
from knot21.graph import (GraphError, complete_bipartite, complete_graph, degree_sequence,
                          diameter, girth, is_triangle_free)
from knot21.moves import DY, YD, find_sites, move_closure, nabla_y, y_nabla

from support import FIXTURES


def test_nabla_y_and_back():
    k4 = complete_graph(4)
    h = nabla_y(k4, (0, 1, 2))
    assert (h.n, h.m) == (5, 6)
    assert h.degree(4) == 3
    assert is_isomorphic(y_nabla(h, 4), k4)


def test_move_errors():
    with pytest.raises(GraphError):
        nabla_y(complete_bipartite(3, 3), (0, 1, 3))
    with pytest.raises(GraphError):
        y_nabla(complete_graph(4), 0)        # neighbours already adjacent
    with pytest.raises(ValueError):
        move_closure([complete_graph(4)], "zz")


def test_sites():
    assert len(find_sites(complete_graph(5), DY)) == 10
    assert len(find_sites(get("C14").graph, YD)) == 14
    assert find_sites(complete_graph(4), YD) == []


def test_k7_closure():
    fam = move_closure([complete_graph(7)], DY)
    assert len(fam) == 14
    assert all(g.m == 21 for g in fam.values())
    assert sorted(g.n for g in fam.values()) == [7, 8, 9, 9, 10, 10, 10, 11, 11, 11, 12, 12, 13, 14]


def test_closure_in_both_directions_reaches_the_twenty():
    both = move_closure([complete_graph(7)], "both")
    assert set(both) == {m.code for m in hc_family()}


def test_catalog_gates():
    for name in NAMES:
        g = get(name).graph
        exp = get(name).expected
        assert g.m == exp.edges and tuple(degree_sequence(g)) == exp.degrees
    c14 = get("C14").graph
    assert girth(c14) >= 4 and diameter(c14) == 3
    h12 = get("H12").graph
    assert is_triangle_free(h12) and degree_sequence(h12) == [4] * 6 + [3] * 6


def test_unknown_name():
    with pytest.raises(CatalogError):
        get("K8")
    with pytest.raises(CatalogError):
        lookup("nope")


def test_k7_family_names():
    fam = k7_family()
    assert [m.name for m in fam] == [f"F{i}" for i in range(14)]
    assert fam[0].aliases == ("K7",)
    aliased = {a: m.name for m in fam for a in m.aliases}
    assert set(aliased) == {"K7", "H12", "C14"}
    assert lookup("C14").graph == get("C14").graph
    assert lookup(aliased["H12"]).code == get("H12").code


def test_hc_family():
    fam = hc_family()
    k7 = {m.code for m in k7_family()}
    assert len(fam) == 20
    inside = [m for m in fam if m.code in k7]
    outside = [m for m in fam if m.code not in k7]
    assert len(inside) == 14 and len(outside) == 6
    assert sorted((m.graph.n, m.name) for m in outside) == [
        (9, "N9"), (10, "N'10"), (10, "N10"), (11, "N'11"), (11, "N11"), (12, "N'12")]
    for n, (plain, primed) in {10: ("N10", "N'10"), 11: ("N11", "N'11")}.items():
        assert lookup(plain).code < lookup(primed).code


def test_match_family():
    assert match_family(get("C14").graph).aliases == ("C14",)
    assert match_family(get("Petersen").graph) is None
    assert match_family(lookup("N9").graph) is None


def test_committed_fixtures_match_constructors():
    for name in NAMES:
        (g,) = read_graphs((FIXTURES / "catalog" / f"{name}.g6").read_text())
        assert canonical_form(g) == get(name).code
