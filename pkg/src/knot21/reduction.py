"""Two-vertex reductions: neighbourhood bookkeeping, the edge-count bound and G-hat."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass

from .graph import Graph, GraphError, delete_vertices, suppress_reducible


@dataclass(frozen=True)
class NeighborhoodStats:
    ne: int          # |E(a) u E(b)|
    v3a: int
    v3b: int
    v3ab: int
    v4ab: int
    vyab: int
    nv3: int         # v3a + v3b - v3ab
    degenerate: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _check_pair(g: Graph, a: int, b: int) -> None:
    if a == b:
        raise GraphError("reduction needs two distinct vertices")
    g._check(a)
    g._check(b)


def _deg_nbrs(g: Graph, v: int, d: int, other: int) -> set[int]:
    # the partner vertex is deleted, never left at degree 2, so it is not counted
    return {w for w in g.neighbors(v) if w != other and g.degree(w) == d}


def neighborhood_stats(g: Graph, a: int, b: int) -> NeighborhoodStats:
    _check_pair(g, a, b)
    if g.multi and any(k > 1 for _, _, k in g.weighted_edges()):
        raise GraphError("neighborhood_stats needs a simple graph")
    ne = g.degree(a) + g.degree(b) - (1 if g.has_edge(a, b) else 0)
    v3a, v3b = _deg_nbrs(g, a, 3, b), _deg_nbrs(g, b, 3, a)
    v3ab = v3a & v3b
    v4ab = _deg_nbrs(g, a, 4, b) & _deg_nbrs(g, b, 4, a)
    # c is counted when a common degree-3 neighbour d has V(d) = {a, b, c},
    # c has degree 3 and d is its only neighbour in V3(a,b): exactly then c is
    # left with two edges and gets suppressed.  A c hit twice or more is the
    # degenerate configuration; its edges are already charged through NV3.
    hits: dict[int, int] = {}
    for d in v3ab:
        (c,) = set(g.neighbors(d)) - {a, b}
        hits[c] = hits.get(c, 0) + 1
    vy = {c for c, k in hits.items() if k == 1 and g.degree(c) == 3}
    degenerate = any(k >= 2 for k in hits.values())
    return NeighborhoodStats(
        ne=ne,
        v3a=len(v3a),
        v3b=len(v3b),
        v3ab=len(v3ab),
        v4ab=len(v4ab),
        vyab=len(vy),
        nv3=len(v3a) + len(v3b) - len(v3ab),
        degenerate=degenerate,
    )


def count_bound(g: Graph, a: int, b: int) -> int:
    """|E| - NE(a,b) - (NV3(a,b) + |V4(a,b)| + |V_Y(a,b)|); no clamping at zero."""
    s = neighborhood_stats(g, a, b)
    return g.m - s.ne - (s.nv3 + s.v4ab + s.vyab)


@dataclass(frozen=True)
class Reduction:
    graph: Graph
    transcript: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def loop_events(self) -> int:
        return sum(1 for op, _ in self.transcript if op == "loop")


def reduce_pair(g: Graph, a: int, b: int, *, rng: random.Random | None = None) -> Reduction:
    """Delete ``a`` and ``b`` then suppress degree <= 2 vertices; result in multi mode."""
    _check_pair(g, a, b)
    transcript: list = [("delete", (a,)), ("delete", (b,))]
    rest = delete_vertices(g, (a, b)).as_multi()
    out = suppress_reducible(rest, rng=rng, transcript=transcript)
    return Reduction(out, tuple(transcript))


@dataclass(frozen=True)
class SecondNeighborhoodProfile:
    e2_size: int
    extra_edges: tuple[tuple[int, int], ...]
    vbar_degrees: tuple[int, ...]
    vbar_sum: int

    def to_dict(self) -> dict:
        return {
            "e2_size": self.e2_size,
            "extra_edges": [list(e) for e in self.extra_edges],
            "vbar_degrees": list(self.vbar_degrees),
            "vbar_sum": self.vbar_sum,
        }


def second_neighborhood(g: Graph, a: int) -> SecondNeighborhoodProfile:
    """Edges at distance <= 1 from a's neighbours, the extra edges, and the degrees beyond."""
    g._check(a)
    nbrs = set(g.neighbors(a))
    e2 = {tuple(sorted(e)) for e in g.edges if e[0] in nbrs or e[1] in nbrs}
    extra = []
    for u, v in sorted(set(g.edges) - e2):
        x, y = (u, v) if g.degree(u) >= g.degree(v) else (v, u)
        extra.append((x, y))
    vbar = sorted((g.degree(v) for v in g.vertices if v != a and v not in nbrs), reverse=True)
    return SecondNeighborhoodProfile(len(e2), tuple(extra), tuple(vbar), sum(vbar))
