"""Isomorph-free generation of graphs with a prescribed degree multiset.

States are partial graphs in which a set ``C`` of *completed* vertices has
all of its edges and every edge touches ``C``.  A child completes one more
vertex ``v`` by joining it to uncompleted vertices.

``generate`` is canonical augmentation (McKay): completions proceed
breadth-first from a marked root, and a child is kept only if ``v`` lies in
the automorphism orbit of the canonically chosen last vertex among those
whose removal leaves a valid parent.  Each class is emitted once without
storing previous output.  ``generate_by_dedup`` is the independent route:
it completes a fixed vertex per state and deduplicates each level by
canonical code.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from . import _kernels
from .graph import Graph, GraphError

MAX_ENUM_VERTICES = 16


class InfeasibleSpecError(GraphError):
    pass


@dataclass(frozen=True)
class DegreeSpec:
    degrees: tuple[int, ...]
    require_connected: bool = True
    require_triangle_free: bool = True
    shards: tuple[int, int] = (1, 0)          # (count, index)

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))
        count, index = self.shards
        if count < 1 or not 0 <= index < count:
            raise InfeasibleSpecError(f"bad shard selection {self.shards}")
        if sum(self.degrees) % 2:
            raise InfeasibleSpecError(f"degree sum {sum(self.degrees)} is odd")
        if len(self.degrees) > MAX_ENUM_VERTICES:
            raise InfeasibleSpecError(f"at most {MAX_ENUM_VERTICES} vertices supported")
        if any(d < 0 or d >= max(len(self.degrees), 1) for d in self.degrees):
            raise InfeasibleSpecError("every degree must lie in [0, n-1]")

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def edges(self) -> int:
        return sum(self.degrees) // 2

    def label(self) -> str:
        return " ".join(f"{d}^{k}" for d, k in sorted(Counter(self.degrees).items(), reverse=True))

    def key(self) -> str:
        """Stable hash of the spec (shard selection excluded)."""
        payload = json.dumps(
            [list(self.degrees), self.require_connected, self.require_triangle_free]
        ).encode()
        return hashlib.sha256(payload).hexdigest()[:16]

    @classmethod
    def parse(cls, text: str, **kw) -> "DegreeSpec":
        """Parse ``"4^6 3^6"`` / ``"4^6,3^6"`` / ``"3 3 3 3"``."""
        degs: list[int] = []
        for tok in text.replace(",", " ").split():
            base, _, mult = tok.partition("^")
            try:
                degs.extend([int(base)] * (int(mult) if mult else 1))
            except ValueError:
                raise InfeasibleSpecError(f"bad degree token {tok!r}") from None
        if not degs:
            raise InfeasibleSpecError("empty degree specification")
        return cls(tuple(degs), **kw)


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass
class EnumStats:
    nodes: int = 0
    canon_calls: int = 0
    rejected: int = 0
    emitted: int = 0
    shard_roots: int = 0


class _Engine:
    def __init__(self, spec: DegreeSpec) -> None:
        self.spec = spec
        self.n = spec.n
        self.t = list(spec.degrees)
        self.full = (1 << self.n) - 1
        self.tf = spec.require_triangle_free
        self.stats = EnumStats()

    # -- shared pieces ----------------------------------------------------

    def colors(self, comp: int) -> list[int]:
        return [2 * self.t[v] + (comp >> v & 1) for v in range(self.n)]

    def canon(self, adj: list[int], comp: int):
        """``(lab, orbits, key)``; the key prefixes the matrix code with the colour sequence."""
        self.stats.canon_calls += 1
        colors = self.colors(comp)
        lab, orbits, code = _kernels.canon_bits(self.n, adj, colors)
        return lab, orbits, bytes(colors[u] for u in lab) + code

    def choices(self, adj: list[int], comp: int, v: int) -> Iterator[int]:
        """Neighbour sets (bitmasks) completing ``v``.

        Untouched vertices of equal target degree are interchangeable, so
        only prefixes of each such class are offered.
        """
        t = self.t
        r = t[v] - adj[v].bit_count()
        if r < 0:
            return
        touched: list[int] = []
        classes: dict[int, list[int]] = {}
        for w in _bits(self.full & ~comp & ~(1 << v)):
            if adj[w].bit_count() >= t[w]:
                continue
            if adj[w]:
                if self.tf and adj[w] & adj[v]:
                    continue
                touched.append(w)
            else:
                classes.setdefault(t[w], []).append(w)
        pools = list(classes.values())
        room = sum(len(p) for p in pools)
        for s in range(max(0, r - room), min(r, len(touched)) + 1):
            for picked in combinations(touched, s):
                base = 0
                for w in picked:
                    base |= 1 << w
                yield from self._fill(pools, 0, r - s, base)

    def _fill(self, pools, i, need, acc) -> Iterator[int]:
        if need == 0:
            yield acc
            return
        if i == len(pools):
            return
        rest = sum(len(p) for p in pools[i + 1:])
        pool = pools[i]
        for k in range(max(0, need - rest), min(need, len(pool)) + 1):
            mask = acc
            for w in pool[:k]:
                mask |= 1 << w
            yield from self._fill(pools, i + 1, need - k, mask)

    def complete(self, adj: list[int], comp: int, v: int, nbrs: int) -> list[int]:
        child = list(adj)
        child[v] |= nbrs
        bit = 1 << v
        for w in _bits(nbrs):
            child[w] |= bit
        return child

    def alive(self, adj: list[int], comp: int) -> bool:
        """Prune states that cannot be finished into a valid graph."""
        unc = self.full & ~comp
        if not unc:
            return True
        t = self.t
        if self.spec.require_connected and comp:
            reach = 0
            for u in _bits(comp):
                reach |= adj[u]
            if not reach & unc:
                return False
        open_ = [w for w in _bits(unc) if adj[w].bit_count() < t[w]]
        open_mask = 0
        for w in open_:
            open_mask |= 1 << w
        for w in open_:
            room = open_mask & ~(1 << w)
            if self.tf:
                aw = adj[w]
                if aw:
                    room = sum(1 for x in _bits(room) if not adj[x] & aw)
                else:
                    room = room.bit_count()
            else:
                room = room.bit_count()
            if room < t[w] - adj[w].bit_count():
                return False
        return True

    def to_graph(self, adj: list[int]) -> Graph:
        edges = [(u, w) for u in range(self.n) for w in _bits(adj[u] >> (u + 1) << (u + 1))]
        return Graph(range(self.n), edges)

    def roots(self) -> list[int]:
        """One untouched vertex per target degree: the first completion choices."""
        seen: dict[int, int] = {}
        for v in range(self.n):
            seen.setdefault(self.t[v], v)
        return [seen[d] for d in sorted(seen, reverse=True)]


class _Augmenter(_Engine):
    """Breadth-first canonical augmentation from a marked root.

    A state carries a root ``rho`` (a vertex of maximum target degree).  It
    is valid when, with ``d`` the largest distance from ``rho`` to a
    completed vertex, every vertex closer than ``d`` is completed and the
    completed part of layer ``d`` is an upper set for ``back`` (the number of
    neighbours in layer ``d - 1``).  Both conditions are local and survive
    deleting a completed layer-``d`` vertex of least ``back``, which is the
    set of removable vertices.  A final graph is kept only for the root orbit
    chosen by ``root_key`` and the canonical order.
    """

    def __init__(self, spec: DegreeSpec, split_depth: int) -> None:
        super().__init__(spec)
        self.split_depth = split_depth
        self.counter = 0
        self.tmax = max(self.t)

    def colors(self, comp: int, rho: int = -1) -> list[int]:
        return [4 * self.t[v] + 2 * (v == rho) + (comp >> v & 1) for v in range(self.n)]

    def canon(self, adj, comp, rho=-1):
        self.stats.canon_calls += 1
        colors = self.colors(comp, rho)
        lab, orbits, code = _kernels.canon_bits(self.n, adj, colors)
        return lab, orbits, bytes(colors[u] for u in lab) + code

    @staticmethod
    def layers(adj: list[int], rho: int) -> list[int]:
        out = [1 << rho]
        seen = 1 << rho
        while True:
            nxt = 0
            for x in _bits(out[-1]):
                nxt |= adj[x]
            nxt &= ~seen
            if not nxt:
                return out
            seen |= nxt
            out.append(nxt)

    def outer(self, adj, comp, rho):
        """``(d, layer_d, layer_d_minus_1)`` for the outermost completed layer."""
        lay = self.layers(adj, rho)
        d = max(i for i, m in enumerate(lay) if m & comp)
        return d, lay[d], (lay[d - 1] if d else 0), (lay[d + 1] if d + 1 < len(lay) else 0)

    def next_candidates(self, adj, comp, rho) -> list[int]:
        d, cur, prev, nxt = self.outer(adj, comp, rho)
        if cur & ~comp:
            pool, back = cur & ~comp, prev
        else:
            pool, back = nxt, cur
        if not pool:
            return []
        score = {v: (adj[v] & back).bit_count() for v in _bits(pool)}
        top = max(score.values())
        return [v for v, k in score.items() if k == top]

    def removable(self, adj, comp, rho) -> list[int]:
        d, cur, prev, _ = self.outer(adj, comp, rho)
        if d == 0:
            return [rho]
        done = {u: (adj[u] & prev).bit_count() for u in _bits(cur & comp)}
        low = min(done.values())
        return [u for u, k in done.items() if k == low]

    def key1(self, adj, comp, u):
        return ((adj[u] & ~comp).bit_count(), self.t[u])

    def key2(self, adj, comp, u):
        t = self.t
        return tuple(sorted((4 * t[w] + 2 * (comp >> w & 1)) * 64 + adj[w].bit_count()
                            for w in _bits(adj[u])))

    def may_accept(self, adj, comp, rho, v) -> bool:
        """Stages of the acceptance test that do not depend on v's new neighbours."""
        ccomp = comp | (1 << v)
        cand = self.removable(adj, ccomp, rho)
        if v not in cand:
            return False
        t = self.t
        mine = (t[v] - (adj[v] & comp).bit_count(), t[v])
        return all(self.key1(adj, ccomp, u) <= mine for u in cand if u != v)

    def accept(self, adj, comp, rho, v):
        cand = self.removable(adj, comp, rho)
        for keyf in (self.key1, self.key2):
            keys = {u: keyf(adj, comp, u) for u in cand}
            top = max(keys.values())
            if keys[v] != top:
                return False, None
            cand = [u for u in cand if keys[u] == top]
            if len(cand) == 1:
                return True, None
        res = self.canon(adj, comp, rho)
        lab, orbits, _ = res
        pos = {u: i for i, u in enumerate(lab)}
        m = max(cand, key=pos.__getitem__)
        return orbits[v] == orbits[m], res

    # -- root selection ---------------------------------------------------

    def root_key(self, adj, comp, w):
        """Invariant of ``w`` once it and its neighbours are completed, else None."""
        if not comp >> w & 1 or adj[w] & ~comp:
            return None
        ball = adj[w]
        for x in _bits(adj[w]):
            ball |= adj[x]
        t = self.t
        return (t[w], tuple(sorted(t[x] for x in _bits(adj[w]))), (ball & ~(1 << w)).bit_count())

    def root_ok(self, adj, comp, rho) -> bool:
        mine = self.root_key(adj, comp, rho)
        if mine is None:
            return True
        for w in _bits(comp):
            if self.t[w] == self.tmax:
                k = self.root_key(adj, comp, w)
                if k is not None and k > mine:
                    return False
        return True

    def final_ok(self, adj, rho) -> bool:
        keys = {w: self.root_key(adj, self.full, w) for w in range(self.n) if self.t[w] == self.tmax}
        top = max(keys.values())
        if keys[rho] != top:
            return False
        best = [w for w, k in keys.items() if k == top]
        if len(best) == 1:
            return True
        lab, orbits, _ = _Engine.canon(self, adj, self.full)
        first = min(best, key=lab.index)
        return orbits[rho] == orbits[first]

    # -- search -----------------------------------------------------------

    def run(self) -> Iterator[Graph]:
        count, index = self.spec.shards
        rho = self.t.index(self.tmax)
        empty = [0] * self.n
        for nbrs in self.choices(empty, 0, rho):
            child = self.complete(empty, 0, rho, nbrs)
            comp = 1 << rho
            if self.alive(child, comp):
                yield from self.expand(child, comp, rho, None, 1, count, index)

    def expand(self, adj, comp, rho, res, depth, count, index) -> Iterator[Graph]:
        self.stats.nodes += 1
        if depth == self.split_depth and count > 1:
            mine = self.counter % count == index
            self.counter += 1
            if not mine:
                return
            self.stats.shard_roots += 1
        if comp == self.full:
            if (count == 1 or depth >= self.split_depth or index == 0) and self.final_ok(adj, rho):
                self.stats.emitted += 1
                yield self.to_graph(adj)
            return
        if res is None:
            res = self.canon(adj, comp, rho)
        orbits = res[1]
        trivial = all(orbits[i] == i for i in range(self.n))
        siblings: set[bytes] = set()
        for v in self.next_candidates(adj, comp, rho):
            if orbits[v] != v or not self.may_accept(adj, comp, rho, v):
                continue
            for nbrs in self.choices(adj, comp, v):
                child = self.complete(adj, comp, v, nbrs)
                ccomp = comp | (1 << v)
                if not self.alive(child, ccomp) or not self.root_ok(child, ccomp, rho):
                    continue
                ok, cres = self.accept(child, ccomp, rho, v)
                if not ok:
                    self.stats.rejected += 1
                    continue
                if not trivial:
                    if cres is None:
                        cres = self.canon(child, ccomp, rho)
                    if cres[2] in siblings:
                        continue
                    siblings.add(cres[2])
                yield from self.expand(child, ccomp, rho, cres, depth + 1, count, index)


def generate(spec: DegreeSpec, *, split_depth: int = 3, stats: EnumStats | None = None) -> Iterator[Graph]:
    """Stream one graph per isomorphism class realizing ``spec`` (canonical augmentation).

    With ``spec.shards = (N, i)`` only the subtrees below the ``i``-th
    residue class (mod N) of nodes at ``split_depth`` are explored; the
    shards partition the output.
    """
    if not spec.require_connected:
        yield from generate_by_dedup(spec, stats=stats)
        return
    if spec.n == 0:
        return
    eng = _Augmenter(spec, split_depth)
    if stats is not None:
        eng.stats = stats
    yield from eng.run()


def generate_by_dedup(spec: DegreeSpec, *, stats: EnumStats | None = None) -> Iterator[Graph]:
    """Level-by-level generation with canonical deduplication of every level."""
    eng = _Engine(spec)
    if stats is not None:
        eng.stats = stats
    if spec.n == 0:
        return
    level: dict[bytes, tuple[list[int], int]] = {}
    for v in eng.roots():
        for nbrs in eng.choices([0] * eng.n, 0, v):
            adj = eng.complete([0] * eng.n, 0, v, nbrs)
            comp = 1 << v
            if eng.alive(adj, comp):
                level.setdefault(eng.canon(adj, comp)[2], (adj, comp))
    for _ in range(eng.n - 1):
        nxt: dict[bytes, tuple[list[int], int]] = {}
        for adj, comp in level.values():
            eng.stats.nodes += 1
            unc = eng.full & ~comp
            boundary = 0
            for u in _bits(comp):
                boundary |= adj[u]
            boundary &= unc
            if not boundary:
                # only reachable when connectivity is not required
                boundary = unc
            v = (boundary & -boundary).bit_length() - 1
            for nbrs in eng.choices(adj, comp, v):
                child = eng.complete(adj, comp, v, nbrs)
                ccomp = comp | (1 << v)
                if not eng.alive(child, ccomp):
                    continue
                code = eng.canon(child, ccomp)[2]
                nxt.setdefault(code, (child, ccomp))
        level = nxt
    for adj, comp in level.values():
        if comp == eng.full:
            eng.stats.emitted += 1
            yield eng.to_graph(adj)
