"""Immutable small undirected graphs and the elementary operations on them."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

INFINITY = float("inf")


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class UnknownVertexError(GraphError):
    pass


class MissingEdgeError(GraphError):
    pass


class Graph:
    """Undirected loop-free graph on small integer vertices.

    In simple mode every pair carries at most one edge; multi mode keeps
    parallel edges (the home of reduced graphs).  Values are immutable:
    every operation returns a new graph.
    """

    __slots__ = ("_adj", "_multi", "_m", "_hash")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[tuple[int, int]] = (),
        multi: bool = False,
    ) -> None:
        adj: dict[int, dict[int, int]] = {}
        for v in vertices:
            adj.setdefault(int(v), {})
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            nu = adj.setdefault(u, {})
            nv = adj.setdefault(v, {})
            k = nu.get(v, 0)
            if k and not multi:
                raise GraphError(f"parallel edge {u}-{v} in a simple graph")
            nu[v] = k + 1
            nv[u] = k + 1
        self._init(adj, multi)

    def _init(self, adj: dict[int, dict[int, int]], multi: bool) -> None:
        self._adj = adj
        self._multi = multi
        self._m = sum(sum(nb.values()) for nb in adj.values()) // 2
        self._hash = None

    @classmethod
    def _wrap(cls, adj: dict[int, dict[int, int]], multi: bool) -> "Graph":
        g = cls.__new__(cls)
        g._init(adj, multi)
        return g

    @classmethod
    def from_multiplicities(cls, vertices: Iterable[int], weighted: Iterable[tuple[int, int, int]],
                            multi: bool = True) -> "Graph":
        """Build from ``(u, v, multiplicity)`` triples."""
        edges = []
        for u, v, k in weighted:
            edges.extend([(u, v)] * k)
        return cls(vertices, edges, multi=multi)

    # -- inspection -------------------------------------------------------

    @property
    def multi(self) -> bool:
        return self._multi

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edge multiset as sorted ``(u, v)`` pairs with ``u < v``, repeated per multiplicity."""
        out = []
        for u in sorted(self._adj):
            for v, k in sorted(self._adj[u].items()):
                if u < v:
                    out.extend([(u, v)] * k)
        return out

    def weighted_edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, k) for u in sorted(self._adj) for v, k in sorted(self._adj[u].items()) if u < v]

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self._adj)

    def _check(self, v: int) -> None:
        if v not in self._adj:
            raise UnknownVertexError(f"unknown vertex {v}")

    def degree(self, v: int) -> int:
        self._check(v)
        return sum(self._adj[v].values())

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return tuple(sorted(self._adj[v]))

    def multiplicity(self, u: int, v: int) -> int:
        self._check(u)
        self._check(v)
        return self._adj[u].get(v, 0)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def adjacency(self) -> dict[int, dict[int, int]]:
        """A copy of the neighbour -> multiplicity map."""
        return {v: dict(nb) for v, nb in self._adj.items()}

    # -- conversions ------------------------------------------------------

    def as_multi(self) -> "Graph":
        return self if self._multi else Graph._wrap(self.adjacency(), True)

    def underlying_simple(self) -> "Graph":
        """Simple graph on the same vertices; parallel edges collapsed."""
        return Graph._wrap({v: {w: 1 for w in nb} for v, nb in self._adj.items()}, False)

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        adj = {mapping[v]: {mapping[w]: k for w, k in nb.items()} for v, nb in self._adj.items()}
        if len(adj) != len(self._adj):
            raise GraphError("relabeling is not injective")
        return Graph._wrap(adj, self._multi)

    def normalized(self) -> "Graph":
        """Relabel vertices to ``0..n-1`` in sorted order."""
        return self.relabel({v: i for i, v in enumerate(self.vertices)})

    def bitmasks(self) -> list[int]:
        """Neighbour bitmasks of the normalized graph (parallel edges ignored)."""
        index = {v: i for i, v in enumerate(self.vertices)}
        out = []
        for v in self.vertices:
            mask = 0
            for w in self._adj[v]:
                mask |= 1 << index[w]
            out.append(mask)
        return out

    # -- value semantics --------------------------------------------------

    def _key(self):
        return (self._multi, self.vertices, tuple(self.weighted_edges()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        mode = "multi" if self._multi else "simple"
        return f"Graph(n={self.n}, m={self.m}, {mode})"


# ---------------------------------------------------------------------------
# elementary queries


def degree_sequence(g: Graph) -> list[int]:
    return sorted((g.degree(v) for v in g.vertices), reverse=True)


def dist(g: Graph, u: int, v: int) -> float:
    """Shortest-path length, or ``INFINITY`` across components."""
    g._check(u)
    g._check(v)
    if u == v:
        return 0
    seen = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g._adj[x]:
            if y not in seen:
                seen[y] = seen[x] + 1
                if y == v:
                    return seen[y]
                queue.append(y)
    return INFINITY


def distances_from(g: Graph, u: int) -> dict[int, int]:
    g._check(u)
    seen = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g._adj[x]:
            if y not in seen:
                seen[y] = seen[x] + 1
                queue.append(y)
    return seen


def diameter(g: Graph) -> float:
    best = 0
    for v in g.vertices:
        d = distances_from(g, v)
        if len(d) < g.n:
            return INFINITY
        best = max(best, max(d.values()))
    return best


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(distances_from(g, g.vertices[0])) == g.n


def components(g: Graph) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for v in g.vertices:
        if v not in seen:
            comp = sorted(distances_from(g, v))
            seen.update(comp)
            out.append(comp)
    return out


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All 3-cycles ``(a, b, c)`` with ``a < b < c``."""
    adj = g._adj
    out = []
    for a in sorted(adj):
        higher = sorted(w for w in adj[a] if w > a)
        for i, b in enumerate(higher):
            for c in higher[i + 1:]:
                if c in adj[b]:
                    out.append((a, b, c))
    return out


def is_triangle_free(g: Graph) -> bool:
    adj = g._adj
    for a, nb in adj.items():
        for b in nb:
            if b > a:
                for c in adj[b]:
                    if c > b and c in nb:
                        return False
    return True


def has_bigon(g: Graph) -> bool:
    return any(k >= 2 for nb in g._adj.values() for k in nb.values())


def girth(g: Graph) -> float:
    """Length of a shortest cycle of the underlying simple graph (``INFINITY`` if acyclic)."""
    best = INFINITY
    adj = g._adj
    for s in adj:
        depth = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, depth[x] + depth[y] + 1)
    return best


# ---------------------------------------------------------------------------
# deletion and contraction


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the remaining vertices (no isolated-vertex cleanup)."""
    drop = set(vertices)
    for v in drop:
        g._check(v)
    adj = {v: {w: k for w, k in nb.items() if w not in drop} for v, nb in g._adj.items() if v not in drop}
    return Graph._wrap(adj, g.multi)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"no edge {u}-{v}")
    adj = g.adjacency()
    k = adj[u][v] - 1
    if k:
        adj[u][v] = adj[v][u] = k
    else:
        del adj[u][v], adj[v][u]
    return Graph._wrap(adj, g.multi)


@dataclass(frozen=True)
class Contraction:
    graph: Graph
    kept: int
    removed: int
    loops: int       # parallel copies of the contracted edge turned into loops and dropped
    merged: int      # parallel pairs collapsed (simple mode only)


def contract(g: Graph, u: int, v: int) -> Contraction:
    """Contract one copy of edge ``u-v``.

    The merged vertex keeps the identity of the higher-degree endpoint, ties
    going to the lower id.
    """
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"no edge {u}-{v}")
    du, dv = g.degree(u), g.degree(v)
    if du > dv or (du == dv and u < v):
        keep, gone = u, v
    else:
        keep, gone = v, u
    adj = g.adjacency()
    loops = adj[keep].pop(gone) - 1
    nb_gone = adj.pop(gone)
    del nb_gone[keep]
    merged = 0
    for w, k in nb_gone.items():
        del adj[w][gone]
        old = adj[keep].get(w, 0)
        if old and not g.multi:
            merged += 1
            continue
        adj[keep][w] = adj[w][keep] = old + k
    return Contraction(Graph._wrap(adj, g.multi), keep, gone, loops, merged)


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    return contract(g, e[0], e[1]).graph


def suppress_reducible(
    g: Graph,
    *,
    rng: random.Random | None = None,
    transcript: list | None = None,
) -> Graph:
    """Remove degree-0 vertices and contract at degree-1/2 vertices until min degree >= 3.

    The result is in multi mode.  Vertices are processed smallest id first,
    or in random order when ``rng`` is given.  Steps are appended to
    ``transcript`` as ``(operation, vertices)`` pairs: ``("delete", (v,))``,
    ``("contract", (v, w, kept))`` and ``("loop", (x, count))``.
    """
    cur = g.as_multi()
    while True:
        low = [v for v, nb in cur._adj.items() if sum(nb.values()) <= 2]
        if not low:
            return cur
        v = rng.choice(sorted(low)) if rng is not None else min(low)
        nb = cur._adj[v]
        if not nb:
            cur = delete_vertices(cur, [v])
            if transcript is not None:
                transcript.append(("delete", (v,)))
            continue
        choices = sorted(nb)
        w = rng.choice(choices) if rng is not None else choices[0]
        c = contract(cur, v, w)
        cur = c.graph
        if transcript is not None:
            transcript.append(("contract", (v, w, c.kept)))
            if c.loops:
                transcript.append(("loop", (c.kept, c.loops)))


# ---------------------------------------------------------------------------
# small constructors


def complete_graph(n: int) -> Graph:
    return Graph(range(n), combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(range(p + q), [(i, p + j) for i in range(p) for j in range(q)])


def cycle_graph(n: int) -> Graph:
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(range(n), [e for e in combinations(range(n), 2) if rng.random() < p])
