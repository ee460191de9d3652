"""Shared helpers and brute-force oracles for the test suite."""

from __future__ import annotations

import random
from itertools import combinations
from pathlib import Path

from knot21.graph import Graph

FIXTURES = Path(__file__).parent / "fixtures"

# acceptance lines collected for the terminal summary
RESULTS: list[str] = []


def record(criterion: int, ok: bool, detail: str) -> None:
    line = f"criterion {criterion:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)


def random_tf21(rng: random.Random, n: int | None = None, m: int = 21) -> Graph:
    """Random triangle-free graph with ``m`` edges and minimum degree >= 3.

    Edges are added one at a time, always starting from a vertex of least
    degree, so every order from 10 to 14 is reachable.
    """
    while True:
        size = n if n is not None else rng.randint(10, 14)
        adj: dict[int, set[int]] = {v: set() for v in range(size)}
        for _ in range(m):
            low = min(len(s) for s in adj.values())
            us = [v for v in adj if len(adj[v]) == low] if low < 3 else list(adj)
            rng.shuffle(us)
            placed = False
            for u in us:
                vs = [v for v in adj if v != u and v not in adj[u] and not adj[u] & adj[v]]
                if vs:
                    v = rng.choice(vs)
                    adj[u].add(v)
                    adj[v].add(u)
                    placed = True
                    break
            if not placed:
                break
        if sum(len(s) for s in adj.values()) == 2 * m and min(len(s) for s in adj.values()) >= 3:
            return Graph(range(size), [(u, v) for u in adj for v in adj[u] if u < v])


def shuffled(g: Graph, rng: random.Random) -> Graph:
    vs = list(g.vertices)
    perm = vs[:]
    rng.shuffle(perm)
    return g.relabel(dict(zip(vs, perm)))


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Exhaustive vertex-by-vertex matching; no invariants beyond degree."""
    if g.n != h.n or g.m != h.m:
        return False
    gv, hv = list(g.vertices), list(h.vertices)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(gv):
            return True
        u = gv[i]
        for x in hv:
            if x in used or g.degree(u) != h.degree(x):
                continue
            if all(g.multiplicity(u, w) == h.multiplicity(x, mapping[w]) for w in gv[:i]):
                mapping[u] = x
                used.add(x)
                if extend(i + 1):
                    return True
                used.discard(x)
                del mapping[u]
        return False

    return extend(0)


def brute_triangles(g: Graph) -> set[frozenset]:
    return {frozenset(t) for t in combinations(g.vertices, 3)
            if g.has_edge(t[0], t[1]) and g.has_edge(t[1], t[2]) and g.has_edge(t[0], t[2])}


def labeled_realizations(degrees: list[int]):
    """Every labeled simple graph on range(n) whose vertex i has degree degrees[i]."""
    n = len(degrees)
    pairs = list(combinations(range(n), 2))
    left = list(degrees)
    chosen: list[tuple[int, int]] = []

    def rec(k: int):
        if k == len(pairs):
            if not any(left):
                yield Graph(range(n), chosen)
            return
        u, v = pairs[k]
        # vertex u has no later pairs once v passes n-1: prune on unmet demand
        if left[u] > sum(1 for p in pairs[k:] if p[0] == u):
            return
        if left[u] and left[v]:
            left[u] -= 1
            left[v] -= 1
            chosen.append((u, v))
            yield from rec(k + 1)
            chosen.pop()
            left[u] += 1
            left[v] += 1
        yield from rec(k + 1)

    yield from rec(0)


def degree5_example() -> tuple[Graph, int]:
    """Triangle-free 21-edge graph with a degree-5 vertex ``a`` = 0 whose
    second neighbourhood matches the worked example: one degree-3 neighbour,
    19 edges within distance one of the neighbours, far degrees 4,4,4,3,3."""
    names = ["a", "b1", "b2", "b3", "b4", "b5", "v1", "v2", "v3", "v4", "v5"]
    idx = {s: i for i, s in enumerate(names)}
    adj = {
        "a": ["b1", "b2", "b3", "b4", "b5"],
        "v1": ["b1", "b2", "b3", "v4"],
        "v2": ["b2", "b3", "b4", "v5"],
        "v3": ["b2", "b3", "b4", "b5"],
        "v4": ["b4", "b5"],
        "v5": ["b1", "b5"],
    }
    g = Graph(range(len(names)), [(idx[u], idx[v]) for u, vs in adj.items() for v in vs])
    return g, idx["a"]
