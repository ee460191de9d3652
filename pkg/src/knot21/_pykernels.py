"""Pure-Python kernels.

Reference implementations of the two hot loops: canonical labeling by
partition refinement with automorphism pruning, and the backtracking search
for a K5 / K(3,3) subdivision.  ``_ckernels.pyx`` implements the same
algorithms and must produce byte-identical canonical codes.
"""

from __future__ import annotations

from itertools import combinations

MAXN = 32
_NO_JUMP = 1 << 30


def _refine(cells: list[list[int]], mat: list[int], n: int) -> list[list[int]]:
    # Equitable refinement: split every cell by its vector of weighted
    # neighbour counts into the current cells, smallest vector first.
    while len(cells) < n:
        k = len(cells)
        cellof = [0] * n
        for ci, cell in enumerate(cells):
            for v in cell:
                cellof[v] = ci
        new: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sigs = {}
            for v in cell:
                s = [0] * k
                base = v * n
                for w in range(n):
                    x = mat[base + w]
                    if x and w != v:
                        s[cellof[w]] += x
                sigs[v] = tuple(s)
            keys = sorted(set(sigs.values()))
            if len(keys) == 1:
                new.append(cell)
                continue
            split = True
            for key in keys:
                new.append([v for v in cell if sigs[v] == key])
        cells = new
        if not split:
            break
    return cells


class _Find:
    __slots__ = ("parent",)

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            if a < b:
                self.parent[b] = a
            else:
                self.parent[a] = b


class _Canon:
    def __init__(self, n: int, mat: list[int]) -> None:
        self.n = n
        self.mat = mat
        self.first_code: bytes | None = None
        self.first_lab: list[int] = []
        self.first_path: list[int] = []
        self.best_code = b""
        self.best_lab: list[int] = []
        self.autos: list[list[int]] = []

    def leaf_code(self, lab: list[int]) -> bytes:
        n, mat = self.n, self.mat
        rows = [lab[i] * n for i in range(n)]
        return bytes(
            mat[rows[i] + lab[j]] for i in range(n) for j in range(i + 1, n)
        )

    def record(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        self.autos.append(perm)

    def leaf(self, cells: list[list[int]], path: list[int]) -> int:
        lab = [c[0] for c in cells]
        code = self.leaf_code(lab)
        if self.first_code is None:
            self.first_code = self.best_code = code
            self.first_lab = self.best_lab = lab
            self.first_path = list(path)
            return _NO_JUMP
        if code == self.first_code:
            self.record(self.first_lab, lab)
            d = 0
            for a, b in zip(path, self.first_path):
                if a != b:
                    break
                d += 1
            return d
        if code == self.best_code:
            self.record(self.best_lab, lab)
        elif code > self.best_code:
            self.best_code = code
            self.best_lab = lab
        return _NO_JUMP

    def stabilizer_orbits(self, path: list[int]) -> _Find:
        uf = _Find(self.n)
        for perm in self.autos:
            if all(perm[v] == v for v in path):
                for v in range(self.n):
                    uf.union(v, perm[v])
        return uf

    def search(self, cells: list[list[int]], path: list[int]) -> int:
        n = self.n
        if len(cells) == n:
            return self.leaf(cells, path)
        depth = len(path)
        ti = 0
        while len(cells[ti]) == 1:
            ti += 1
        target = cells[ti]
        explored: list[int] = []
        seen_autos = -1
        uf = None
        for w in target:
            if explored:
                if len(self.autos) != seen_autos:
                    uf = self.stabilizer_orbits(path)
                    seen_autos = len(self.autos)
                fw = uf.find(w)
                if any(uf.find(u) == fw for u in explored):
                    continue
            explored.append(w)
            child = cells[:ti] + [[w], [x for x in target if x != w]] + cells[ti + 1 :]
            child = _refine(child, self.mat, n)
            path.append(w)
            r = self.search(child, path)
            path.pop()
            if r < depth:
                return r
        return _NO_JUMP


def canon(n: int, mat: list[int], colors: list[int]) -> tuple[list[int], list[int], bytes]:
    """Canonical labeling of a vertex-coloured weighted graph.

    ``mat`` is the flattened ``n*n`` symmetric multiplicity matrix (diagonal
    ignored, entries < 256).  Returns ``(lab, orbits, code)``: ``lab[i]`` is
    the vertex placed at canonical position ``i``, ``orbits[v]`` the smallest
    vertex in the automorphism orbit of ``v``, and ``code`` the upper triangle
    of the relabelled matrix.
    """
    if n > MAXN:
        raise ValueError(f"canonical labeling supports at most {MAXN} vertices")
    if n == 0:
        return [], [], b""
    order = sorted(range(n), key=lambda v: (colors[v], v))
    cells: list[list[int]] = []
    prev = None
    for v in order:
        if colors[v] != prev:
            cells.append([])
            prev = colors[v]
        cells[-1].append(v)
    cells = _refine(cells, mat, n)
    state = _Canon(n, mat)
    state.search(cells, [])
    uf = _Find(n)
    for perm in state.autos:
        for v in range(n):
            uf.union(v, perm[v])
    return state.best_lab, [uf.find(v) for v in range(n)], state.best_code


def canon_bits(n: int, adj: list[int], colors: list[int]) -> tuple[list[int], list[int], bytes]:
    """``canon`` for a simple graph given as neighbour bitmasks."""
    mat = [0] * (n * n)
    for v in range(n):
        row = adj[v]
        base = v * n
        for w in range(n):
            if row >> w & 1:
                mat[base + w] = 1
    return canon(n, mat, colors)


# ---------------------------------------------------------------------------
# Kuratowski subdivision search


def _reach(a: int, free: int, adj: list[int]) -> int:
    seen = 0
    frontier = adj[a] & free
    while frontier:
        seen |= frontier
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & free & ~seen
    return seen


def _route(pairs: list[tuple[int, int]], idx: int, free: int, adj: list[int],
           out: list[list[int]]) -> bool:
    if idx == len(pairs):
        return True
    for a, b in pairs[idx:]:
        r = _reach(a, free, adj)
        if not adj[b] & r:
            return False
    a, b = pairs[idx]
    stack_path = [a]

    def extend(cur: int, free_now: int) -> bool:
        nb = adj[cur]
        if cur != a and nb >> b & 1:
            stack_path.append(b)
            out.append(list(stack_path))
            if _route(pairs, idx + 1, free_now, adj, out):
                return True
            out.pop()
            stack_path.pop()
        cand = nb & free_now
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            cand ^= low
            stack_path.append(x)
            if extend(x, free_now & ~low):
                return True
            stack_path.pop()
        return False

    return extend(a, free)


def kuratowski_search(n: int, adj: list[int]) -> tuple[str, list[int], list[list[int]]] | None:
    """Find a K5 or K(3,3) subdivision in a simple graph.

    Returns ``(kind, branch, paths)`` where ``kind`` is ``"K5"`` or
    ``"K33"``, ``branch`` the branch vertices (for K33 the first three form
    one side) and ``paths`` the branch-to-branch paths, or ``None``.  Paths
    between adjacent branch vertices are always the direct edge: any other
    routing can be swapped for it without touching the remaining paths.
    """
    full = (1 << n) - 1
    deg = [bin(adj[v]).count("1") for v in range(n)]
    big = [v for v in range(n) if deg[v] >= 4]
    for s in combinations(big, 5):
        found = _try_branch("K5", list(s), [(s[i], s[j]) for i in range(5) for j in range(i + 1, 5)],
                            full, adj)
        if found:
            return found
    cubic = [v for v in range(n) if deg[v] >= 3]
    for s in combinations(cubic, 6):
        for rest in combinations(s[1:], 2):
            side_a = [s[0], *rest]
            side_b = [v for v in s if v not in side_a]
            pairs = [(x, y) for x in side_a for y in side_b]
            found = _try_branch("K33", side_a + side_b, pairs, full, adj)
            if found:
                return found
    return None


def _try_branch(kind: str, branch: list[int], pairs: list[tuple[int, int]], full: int,
                adj: list[int]):
    bmask = 0
    for v in branch:
        bmask |= 1 << v
    free = full & ~bmask
    direct = [p for p in pairs if adj[p[0]] >> p[1] & 1]
    routed = [p for p in pairs if not adj[p[0]] >> p[1] & 1]
    if len(routed) > bin(free).count("1"):
        return None
    out: list[list[int]] = []
    if not _route(routed, 0, free, adj, out):
        return None
    return kind, branch, [[a, b] for a, b in direct] + out
