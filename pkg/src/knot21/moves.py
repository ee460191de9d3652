"""Triangle-to-Y and Y-to-triangle exchange moves and closures under them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .canonical import CanonicalCode, canonical_form, canonical_graph
from .graph import Graph, GraphError, triangles

DY = "dy"      # triangle -> Y
YD = "yd"      # Y -> triangle


@dataclass(frozen=True)
class MoveSite:
    kind: str                     # "triangle" or "y"
    vertices: tuple[int, ...]     # triangle corners, or the degree-3 vertex


def find_sites(g: Graph, kind: str) -> list[MoveSite]:
    """All triangles (``dy``) or all degree-3 vertices with pairwise non-adjacent neighbours (``yd``)."""
    if kind == DY:
        return [MoveSite("triangle", t) for t in triangles(g)]
    if kind == YD:
        out = []
        for v in g.vertices:
            if g.degree(v) != 3 or len(g.neighbors(v)) != 3:
                continue
            x, y, z = g.neighbors(v)
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                out.append(MoveSite("y", (v,)))
        return out
    raise ValueError(f"unknown move kind {kind!r}")


def nabla_y(g: Graph, site: MoveSite | tuple[int, int, int]) -> Graph:
    a, b, c = site.vertices if isinstance(site, MoveSite) else site
    if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise GraphError(f"{(a, b, c)} is not a triangle")
    adj = g.adjacency()
    for u, v in ((a, b), (b, c), (a, c)):
        k = adj[u][v] - 1
        if k:
            adj[u][v] = adj[v][u] = k
        else:
            del adj[u][v], adj[v][u]
    new = max(adj) + 1
    adj[new] = {a: 1, b: 1, c: 1}
    for u in (a, b, c):
        adj[u][new] = 1
    return Graph._wrap(adj, g.multi)


def y_nabla(g: Graph, site: MoveSite | int) -> Graph:
    v = site.vertices[0] if isinstance(site, MoveSite) else site
    if g.degree(v) != 3 or len(g.neighbors(v)) != 3:
        raise GraphError(f"vertex {v} is not a simple degree-3 vertex")
    x, y, z = g.neighbors(v)
    if g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z):
        raise GraphError(f"Y-to-triangle at {v} would create a parallel edge")
    adj = g.adjacency()
    for w in (x, y, z):
        del adj[w][v]
    del adj[v]
    for u, w in ((x, y), (x, z), (y, z)):
        adj[u][w] = adj[w][u] = 1
    return Graph._wrap(adj, g.multi)


def _apply(g: Graph, kind: str) -> Iterable[Graph]:
    for site in find_sites(g, kind):
        yield nabla_y(g, site) if kind == DY else y_nabla(g, site)


def move_closure(seeds: Iterable[Graph], ops: str | Iterable[str] = DY) -> dict[CanonicalCode, Graph]:
    """Breadth-first closure of ``seeds`` under the given moves, one canonical representative per class."""
    kinds = (ops,) if isinstance(ops, str) else tuple(ops)
    if "both" in kinds:
        kinds = (DY, YD)
    for k in kinds:
        if k not in (DY, YD):
            raise ValueError(f"unknown move kind {k!r}")
    family: dict[CanonicalCode, Graph] = {}
    queue: deque[Graph] = deque()
    for s in seeds:
        code = canonical_form(s)
        if code not in family:
            family[code] = canonical_graph(s)
            queue.append(family[code])
    while queue:
        g = queue.popleft()
        for kind in kinds:
            for h in _apply(g, kind):
                code = canonical_form(h)
                if code not in family:
                    family[code] = canonical_graph(h)
                    queue.append(family[code])
    return dict(sorted(family.items(), key=lambda kv: (kv[1].n, kv[0])))
