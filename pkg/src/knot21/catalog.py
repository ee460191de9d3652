"""Named graphs: constructors, property gates and the two 21-edge move families."""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .canonical import CanonicalCode, canonical_form, is_isomorphic
from .graph import (Graph, GraphError, complete_bipartite, complete_graph,
                    degree_sequence, diameter, girth, is_triangle_free)
from .moves import DY, YD, move_closure
from .planarity import apex_witness


class CatalogError(GraphError):
    pass


class ConstructionError(CatalogError):
    """A constructed graph failed one of its property gates."""


@dataclass(frozen=True)
class ExpectedProperties:
    edges: int
    degrees: tuple[int, ...]
    triangle_free: bool
    two_apex: bool | None = None       # None: not asserted


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    expected: ExpectedProperties | None = None
    aliases: tuple[str, ...] = ()

    @property
    def code(self) -> CanonicalCode:
        return canonical_form(self.graph)


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


C14_LABELS = ["a", "b1", "b2", "b3", "c1", "c2", "c3", "c4", "c5", "c6", "d1", "d2", "d3", "d4"]


def _c14() -> Graph:
    idx = {s: i for i, s in enumerate(C14_LABELS)}
    adj = {
        "a": ["b1", "b2", "b3"],
        "b1": ["c1", "c2"], "b2": ["c3", "c4"], "b3": ["c5", "c6"],
        "d1": ["c1", "c3", "c5"], "d2": ["c1", "c4", "c6"],
        "d3": ["c2", "c3", "c6"], "d4": ["c2", "c4", "c5"],
    }
    return Graph(range(14), [(idx[u], idx[v]) for u, vs in adj.items() for v in vs])


H12_LABELS = ["a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "d", "e1", "e2", "e3"]


def _h12() -> Graph:
    idx = {s: i for i, s in enumerate(H12_LABELS)}
    edges = [(f"a{i}", f"a{i % 6 + 1}") for i in range(1, 7)]
    edges += [("b1", a) for a in ("a1", "a3", "a5")] + [("b2", a) for a in ("a2", "a4", "a6")]
    edges += [("d", e) for e in ("e1", "e2", "e3")]
    edges += [("e1", "a1"), ("e1", "a4"), ("e2", "a2"), ("e2", "a5"), ("e3", "a3"), ("e3", "a6")]
    return Graph(range(12), [(idx[u], idx[v]) for u, v in edges])


def _props(edges, degrees, tf, two_apex=None) -> ExpectedProperties:
    return ExpectedProperties(edges, tuple(degrees), tf, two_apex)


_BUILDERS = {
    "K3": (lambda: complete_graph(3), _props(3, [2] * 3, False, True)),
    "K4": (lambda: complete_graph(4), _props(6, [3] * 4, False, True)),
    "K5": (lambda: complete_graph(5), _props(10, [4] * 5, False, True)),
    "K6": (lambda: complete_graph(6), _props(15, [5] * 6, False, True)),
    "K7": (lambda: complete_graph(7), _props(21, [6] * 7, False, False)),
    "K33": (lambda: complete_bipartite(3, 3), _props(9, [3] * 6, True, True)),
    "Petersen": (_petersen, _props(15, [3] * 10, True, True)),
    "H12": (_h12, _props(21, [4] * 6 + [3] * 6, True, False)),
    "C14": (_c14, _props(21, [3] * 14, True, False)),
}

NAMES = tuple(_BUILDERS)


def check_properties(g: Graph, exp: ExpectedProperties) -> list[str]:
    problems = []
    if g.m != exp.edges:
        problems.append(f"edge count {g.m} != {exp.edges}")
    if tuple(degree_sequence(g)) != exp.degrees:
        problems.append(f"degree sequence {degree_sequence(g)} != {list(exp.degrees)}")
    if is_triangle_free(g) != exp.triangle_free:
        problems.append(f"triangle-free is {not exp.triangle_free}")
    if exp.two_apex is not None and apex_witness(g, 2).is_apex != exp.two_apex:
        problems.append(f"2-apex is {not exp.two_apex}")
    return problems


@functools.lru_cache(maxsize=None)
def get(name: str) -> NamedGraph:
    if name not in _BUILDERS:
        raise CatalogError(f"unknown graph name {name!r}; known: {', '.join(NAMES)}")
    build, exp = _BUILDERS[name]
    g = build()
    problems = check_properties(g, exp)
    if name == "C14":
        if girth(g) < 4 or diameter(g) > 3:
            problems.append("C14 must have girth >= 4 and diameter <= 3")
    if name in ("H12", "C14"):
        if not any(is_isomorphic(g, f) for f in _k7_closure().values()):
            problems.append(f"{name} is not in the triangle-to-Y family of K7")
    if problems:
        raise ConstructionError(f"{name}: " + "; ".join(problems))
    return NamedGraph(name, g, exp)


@functools.lru_cache(maxsize=None)
def _k7_closure() -> dict[CanonicalCode, Graph]:
    return move_closure([complete_graph(7)], DY)


@functools.lru_cache(maxsize=None)
def k7_family() -> tuple[NamedGraph, ...]:
    """K7 and the 13 graphs reached from it by triangle-to-Y moves: F0 = K7, F1..F13 by (order, code)."""
    fam = _k7_closure()
    k7 = canonical_form(complete_graph(7))
    rest = [c for c in fam if c != k7]
    named = {canonical_form(get(n).graph): n for n in ("H12", "C14")}
    out = [NamedGraph("F0", fam[k7], aliases=("K7",))]
    for i, code in enumerate(rest, start=1):
        alias = (named[code],) if code in named else ()
        out.append(NamedGraph(f"F{i}", fam[code], aliases=alias))
    return tuple(out)


N_NAMES = {9: ["N9"], 10: ["N10", "N'10"], 11: ["N11", "N'11"], 12: ["N'12"]}


@functools.lru_cache(maxsize=None)
def hc_family() -> tuple[NamedGraph, ...]:
    """Closure of {H12, C14} under Y-to-triangle moves.

    Members of the K7 family keep their F names; the rest are named by order
    (N9, N10, N'10, N11, N'11, N'12), the smaller canonical code taking the
    unprimed name within an order.
    """
    fam = move_closure([get("H12").graph, get("C14").graph], YD)
    k7 = {f.code: f for f in k7_family()}
    outside: dict[int, list[CanonicalCode]] = {}
    for code, g in fam.items():
        if code not in k7:
            outside.setdefault(g.n, []).append(code)
    names: dict[CanonicalCode, str] = {}
    ok = len(fam) == 20 and {n: len(c) for n, c in outside.items()} == {n: len(v) for n, v in N_NAMES.items()}
    if not ok:
        dump = "\n".join(f"  n={g.n} m={g.m} code={c.hex()}" for c, g in fam.items())
        raise ConstructionError(
            f"Y-to-triangle closure of H12 and C14 has {len(fam)} classes "
            f"({sum(map(len, outside.values()))} outside the K7 family):\n{dump}"
        )
    for n, codes in outside.items():
        for name, code in zip(N_NAMES[n], sorted(codes)):
            names[code] = name
    out = []
    for code, g in fam.items():
        if code in k7:
            f = k7[code]
            out.append(NamedGraph(f.name, g, aliases=f.aliases))
        else:
            out.append(NamedGraph(names[code], g))
    return tuple(out)


def lookup(name: str) -> NamedGraph:
    """Catalog graph, or a family member by name or alias (F0..F13, N9, ...)."""
    if name in _BUILDERS:
        return get(name)
    for member in k7_family() + hc_family():
        if member.name == name or name in member.aliases:
            return member
    raise CatalogError(f"unknown graph name {name!r}")


def match_family(g: Graph) -> NamedGraph | None:
    """The K7-family member isomorphic to ``g``, if any."""
    if g.m != 21:
        return None
    code = canonical_form(g)
    for f in k7_family():
        if f.code == code:
            return f
    return None
