"""Planarity, Kuratowski certificates, K(3,3)-homeomorphism and apex search.

``is_planar`` runs the Demoucron-Malgrange-Pertuiset path-addition method on
each biconnected block.  ``find_kuratowski`` is an independent check: a
backtracking search for a K5 or K(3,3) subdivision whose result is verified
edge by edge against the input graph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from . import _kernels
from .canonical import is_isomorphic
from .graph import (Graph, complete_bipartite, delete_vertices, has_bigon,
                    is_triangle_free, suppress_reducible)


# ---------------------------------------------------------------------------
# path-addition planarity


def _blocks(adj: dict[int, set[int]]) -> list[set[tuple[int, int]]]:
    """Biconnected components as edge sets (Hopcroft-Tarjan, iterative)."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    out = []
    counter = 0
    for root in sorted(adj):
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack = [(root, None, iter(sorted(adj[root])))]
        estack: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    estack.append((v, w))
                    stack.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if index[w] < index[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if low[v] >= index[parent]:
                    block = set()
                    while True:
                        e = estack.pop()
                        block.add(e)
                        if e == (parent, v):
                            break
                    out.append(block)
    return out


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = min(adj)
    parent = {start: None}
    order = [start]
    stack = [(start, iter(sorted(adj[start])))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w == parent[v]:
                continue
            if w in parent:
                cyc = [v]
                while cyc[-1] != w:
                    cyc.append(parent[cyc[-1]])
                return cyc
            parent[w] = v
            order.append(w)
            stack.append((w, iter(sorted(adj[w]))))
            break
        else:
            stack.pop()
    raise ValueError("block has no cycle")


def _fragments(adj, hv: set[int], he: set[frozenset]):
    frags = []
    for u in sorted(hv):
        for w in sorted(adj[u]):
            if w in hv and u < w and frozenset((u, w)) not in he:
                frags.append(({u, w}, None))
    seen: set[int] = set()
    for s in sorted(adj):
        if s in hv or s in seen:
            continue
        comp = {s}
        todo = [s]
        attach = set()
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if y in hv:
                    attach.add(y)
                elif y not in comp:
                    comp.add(y)
                    todo.append(y)
        seen |= comp
        frags.append((attach, comp))
    return frags


def _frag_path(adj, attach: set[int], comp: set[int] | None) -> list[int]:
    ordered = sorted(attach)
    u = ordered[0]
    if comp is None:
        return [u, ordered[1]]
    # BFS from u through the fragment interior to any other attachment vertex.
    start = [x for x in sorted(adj[u]) if x in comp]
    prev = {x: u for x in start}
    queue = list(start)
    i = 0
    while i < len(queue):
        x = queue[i]
        i += 1
        for y in sorted(adj[x]):
            if y in attach and y != u:
                path = [y, x]
                while path[-1] != u:
                    path.append(prev[path[-1]])
                return path[::-1]
            if y in comp and y not in prev:
                prev[y] = x
                queue.append(y)
    raise ValueError("fragment with a single attachment in a biconnected block")


def _block_planar(adj: dict[int, set[int]]) -> bool:
    n = len(adj)
    m = sum(len(nb) for nb in adj.values()) // 2
    if n <= 4:
        return True
    if m > 3 * n - 6:
        return False
    cyc = _find_cycle(adj)
    hv = set(cyc)
    he = {frozenset((cyc[i], cyc[(i + 1) % len(cyc)])) for i in range(len(cyc))}
    faces = [list(cyc), list(cyc)]
    while True:
        frags = _fragments(adj, hv, he)
        if not frags:
            return True
        face_sets = [set(f) for f in faces]
        choice = None
        for attach, comp in frags:
            ok = [i for i, fs in enumerate(face_sets) if attach <= fs]
            if not ok:
                return False
            if choice is None or len(ok) == 1:
                choice = (attach, comp, ok[0])
                if len(ok) == 1:
                    break
        attach, comp, fi = choice
        path = _frag_path(adj, attach, comp)
        face = faces.pop(fi)
        i, j = face.index(path[0]), face.index(path[-1])
        k = len(face)
        arc_ij = [face[(i + t) % k] for t in range((j - i) % k + 1)]
        arc_ji = [face[(j + t) % k] for t in range((i - j) % k + 1)]
        inner = path[1:-1]
        faces.append(arc_ij + inner[::-1])
        faces.append(arc_ji + inner)
        hv.update(path)
        he.update(frozenset((path[t], path[t + 1])) for t in range(len(path) - 1))


def is_planar(g: Graph) -> bool:
    """Planarity of the underlying simple graph."""
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    for block in _blocks(adj):
        sub: dict[int, set[int]] = {}
        for u, v in block:
            sub.setdefault(u, set()).add(v)
            sub.setdefault(v, set()).add(u)
        if not _block_planar(sub):
            return False
    return True


# ---------------------------------------------------------------------------
# Kuratowski subdivisions


@dataclass(frozen=True)
class KuratowskiCertificate:
    kind: str                          # "K5" or "K33"
    branch: tuple[int, ...]            # for K33 the first three form one side
    paths: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "branch": list(self.branch), "paths": [list(p) for p in self.paths]}


def _reduce_for_search(g: Graph):
    """Simple graph with degree <= 1 vertices deleted and degree-2 vertices
    suppressed; each surviving edge remembers the original path it stands for."""
    adj: dict[int, dict[int, tuple[int, ...]]] = {
        v: {w: (v, w) for w in g.neighbors(v)} for v in g.vertices
    }

    def drop_edge(a, b):
        del adj[a][b], adj[b][a]

    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v not in adj:
                continue
            nb = adj[v]
            if len(nb) <= 1:
                for w in list(nb):
                    drop_edge(v, w)
                del adj[v]
                changed = True
            elif len(nb) == 2:
                x, y = sorted(nb)
                px = adj[x][v]          # path x .. v
                py = adj[v][y]          # path v .. y
                drop_edge(v, x)
                drop_edge(v, y)
                del adj[v]
                if y not in adj[x]:
                    p = px + py[1:]
                    adj[x][y] = p
                    adj[y][x] = p[::-1]
                changed = True
    return adj


def find_kuratowski(g: Graph) -> KuratowskiCertificate | None:
    """A K5 or K(3,3) subdivision of ``g`` (certificate of non-planarity), or None."""
    red = _reduce_for_search(g)
    if len(red) < 5:
        return None
    simple = {v: set(nb) for v, nb in red.items()}
    for block in _blocks(simple):
        bv = sorted({x for e in block for x in e})
        if len(bv) < 5 or len(block) < 9:
            continue
        local = {v: i for i, v in enumerate(bv)}
        masks = [0] * len(bv)
        for u, v in block:
            masks[local[u]] |= 1 << local[v]
            masks[local[v]] |= 1 << local[u]
        found = _kernels.kuratowski_search(len(bv), masks)
        if found is None:
            continue
        kind, branch, paths = found
        full_paths = []
        for p in paths:
            seq = [bv[p[0]]]
            for a, b in zip(p, p[1:]):
                seq.extend(red[bv[a]][bv[b]][1:])
            full_paths.append(tuple(seq))
        cert = KuratowskiCertificate(kind, tuple(bv[b] for b in branch), tuple(full_paths))
        if not verify_kuratowski(g, cert):
            raise AssertionError("Kuratowski search produced an invalid certificate")
        return cert
    return None


def verify_kuratowski(g: Graph, cert: KuratowskiCertificate) -> bool:
    """Check branch vertices, endpoint pairs, adjacency along paths and internal disjointness."""
    branch = cert.branch
    if len(set(branch)) != len(branch) or any(b not in g for b in branch):
        return False
    if cert.kind == "K5" and len(branch) == 5:
        want = {frozenset(p) for p in combinations(branch, 2)}
    elif cert.kind == "K33" and len(branch) == 6:
        want = {frozenset((a, b)) for a in branch[:3] for b in branch[3:]}
    else:
        return False
    got = set()
    used: set[int] = set()
    bset = set(branch)
    for p in cert.paths:
        if len(p) < 2:
            return False
        ends = frozenset((p[0], p[-1]))
        if ends in got or ends not in want:
            return False
        got.add(ends)
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                return False
        for x in p[1:-1]:
            if x in used or x in bset:
                return False
            used.add(x)
    return got == want


# ---------------------------------------------------------------------------
# K(3,3) homeomorphism and apex search

_K33 = complete_bipartite(3, 3)


def is_homeomorphic_k33(g: Graph) -> bool:
    red = suppress_reducible(g)
    if red.n != 6 or red.m != 9 or has_bigon(red):
        return False
    if any(red.degree(v) != 3 for v in red.vertices) or not is_triangle_free(red):
        return False
    return is_isomorphic(red, _K33)


class ApexKind(enum.Enum):
    PLANAR = "planar"
    ONE_APEX = "1-apex"
    TWO_APEX = "2-apex"
    NOT_APEX = "not-apex"


@dataclass(frozen=True)
class ApexWitness:
    kind: ApexKind
    vertices: tuple[int, ...] = ()
    k: int = 2

    @property
    def label(self) -> str:
        if self.kind is ApexKind.NOT_APEX:
            return f"not-{self.k}-apex"
        return self.kind.value

    @property
    def is_apex(self) -> bool:
        return self.kind is not ApexKind.NOT_APEX

    def to_dict(self) -> dict:
        return {"kind": self.label, "vertices": list(self.vertices), "k": self.k}


_KINDS = {0: ApexKind.PLANAR, 1: ApexKind.ONE_APEX, 2: ApexKind.TWO_APEX}


def apex_witness(g: Graph, k: int = 2) -> ApexWitness:
    """First vertex set of size <= k (size, then lexicographic) whose deletion leaves g planar."""
    if k not in (0, 1, 2):
        raise ValueError("k must be 0, 1 or 2")
    vs = g.vertices
    for size in range(k + 1):
        for s in combinations(vs, size):
            rest = delete_vertices(g, s)
            if is_planar(rest):
                return ApexWitness(_KINDS[size], s, k)
    return ApexWitness(ApexKind.NOT_APEX, (), k)


def verify_apex_witness(g: Graph, w: ApexWitness) -> bool:
    if not w.is_apex:
        return True
    return is_planar(delete_vertices(g, w.vertices))
