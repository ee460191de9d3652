# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: canonical labeling and Kuratowski subdivision search.

Same algorithms, visiting orders and outputs as ``_pykernels``.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy, memcmp, memset
from libc.stdint cimport uint64_t

cdef enum:
    MAXN = 32
    CODELEN = 496
    NOJUMP = 1 << 30


ctypedef struct CanonState:
    int n
    int codelen
    unsigned char mat[MAXN * MAXN]
    int have_first
    unsigned char first_code[CODELEN]
    unsigned char best_code[CODELEN]
    unsigned char leaf[CODELEN]
    int first_lab[MAXN]
    int best_lab[MAXN]
    int first_path[MAXN]
    int first_depth
    int *autos
    int nautos
    int cap
    int failed


cdef int _rowcmp(int *cnt, int a, int b, int k) noexcept nogil:
    cdef int c
    cdef int *ra = cnt + a * MAXN
    cdef int *rb = cnt + b * MAXN
    for c in range(k):
        if ra[c] != rb[c]:
            return -1 if ra[c] < rb[c] else 1
    return 0


cdef void _refine(CanonState *st, int *lab, char *flag) noexcept nogil:
    cdef int n = st.n
    cdef int cellof[MAXN]
    cdef int cnt[MAXN * MAXN]
    cdef int k, pos, end, i, j, v, w, x, split
    while True:
        k = 0
        for pos in range(n):
            if flag[pos]:
                k += 1
            cellof[lab[pos]] = k - 1
        if k == n:
            return
        for v in range(n):
            for j in range(k):
                cnt[v * MAXN + j] = 0
            for w in range(n):
                x = st.mat[v * n + w]
                if x and w != v:
                    cnt[v * MAXN + cellof[w]] += x
        split = 0
        pos = 0
        while pos < n:
            end = pos + 1
            while end < n and not flag[end]:
                end += 1
            if end - pos > 1:
                for i in range(pos + 1, end):
                    v = lab[i]
                    j = i - 1
                    while j >= pos and _rowcmp(cnt, lab[j], v, k) > 0:
                        lab[j + 1] = lab[j]
                        j -= 1
                    lab[j + 1] = v
                for i in range(pos + 1, end):
                    if _rowcmp(cnt, lab[i - 1], lab[i], k) != 0:
                        flag[i] = 1
                        split = 1
            pos = end
        if not split:
            return


cdef void _record(CanonState *st, int *src, int *dst) noexcept nogil:
    cdef int i
    cdef int *p
    if st.nautos == st.cap:
        p = <int *> realloc(st.autos, sizeof(int) * MAXN * st.cap * 2)
        if p == NULL:
            st.failed = 1
            return
        st.autos = p
        st.cap *= 2
    p = st.autos + st.nautos * MAXN
    for i in range(st.n):
        p[src[i]] = dst[i]
    st.nautos += 1


cdef int _find(int *parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef void _union(int *parent, int a, int b) noexcept nogil:
    a = _find(parent, a)
    b = _find(parent, b)
    if a != b:
        if a < b:
            parent[b] = a
        else:
            parent[a] = b


cdef void _stab_orbits(CanonState *st, int *path, int depth, int *parent) noexcept nogil:
    cdef int i, v, ok
    cdef int *p
    for v in range(st.n):
        parent[v] = v
    for i in range(st.nautos):
        p = st.autos + i * MAXN
        ok = 1
        for v in range(depth):
            if p[path[v]] != path[v]:
                ok = 0
                break
        if ok:
            for v in range(st.n):
                _union(parent, v, p[v])


cdef int _leaf(CanonState *st, int *lab, int *path, int depth) noexcept nogil:
    cdef int n = st.n
    cdef int i, j, t = 0, c, d
    for i in range(n):
        for j in range(i + 1, n):
            st.leaf[t] = st.mat[lab[i] * n + lab[j]]
            t += 1
    if not st.have_first:
        st.have_first = 1
        memcpy(st.first_code, st.leaf, st.codelen)
        memcpy(st.best_code, st.leaf, st.codelen)
        memcpy(st.first_lab, lab, sizeof(int) * n)
        memcpy(st.best_lab, lab, sizeof(int) * n)
        memcpy(st.first_path, path, sizeof(int) * depth)
        st.first_depth = depth
        return NOJUMP
    if memcmp(st.leaf, st.first_code, st.codelen) == 0:
        _record(st, st.first_lab, lab)
        d = 0
        while d < depth and d < st.first_depth and path[d] == st.first_path[d]:
            d += 1
        return d
    c = memcmp(st.leaf, st.best_code, st.codelen)
    if c == 0:
        _record(st, st.best_lab, lab)
    elif c > 0:
        memcpy(st.best_code, st.leaf, st.codelen)
        memcpy(st.best_lab, lab, sizeof(int) * n)
    return NOJUMP


cdef int _search(CanonState *st, int *lab, char *flag, int *path, int depth) noexcept nogil:
    cdef int n = st.n
    cdef int ncells = 0, pos, tpos, tend, idx, w, i, t, r, seen, fw, dup
    cdef int clab[MAXN]
    cdef char cflag[MAXN]
    cdef int explored[MAXN]
    cdef int nexp = 0
    cdef int parent[MAXN]
    for pos in range(n):
        if flag[pos]:
            ncells += 1
    if ncells == n:
        return _leaf(st, lab, path, depth)
    tpos = 0
    while True:
        tend = tpos + 1
        while tend < n and not flag[tend]:
            tend += 1
        if tend - tpos > 1:
            break
        tpos = tend
    seen = -1
    for idx in range(tpos, tend):
        if st.failed:
            return 0
        w = lab[idx]
        if nexp > 0:
            if st.nautos != seen:
                _stab_orbits(st, path, depth, parent)
                seen = st.nautos
            fw = _find(parent, w)
            dup = 0
            for i in range(nexp):
                if _find(parent, explored[i]) == fw:
                    dup = 1
                    break
            if dup:
                continue
        explored[nexp] = w
        nexp += 1
        memcpy(clab, lab, sizeof(int) * n)
        memcpy(cflag, flag, n)
        clab[tpos] = w
        t = tpos + 1
        for i in range(tpos, tend):
            if lab[i] != w:
                clab[t] = lab[i]
                t += 1
        cflag[tpos + 1] = 1
        _refine(st, clab, cflag)
        path[depth] = w
        r = _search(st, clab, cflag, path, depth + 1)
        if r < depth:
            return r
    return NOJUMP


def canon(int n, mat, colors):
    """Canonical labeling; see ``_pykernels.canon``."""
    if n > MAXN:
        raise ValueError(f"canonical labeling supports at most {MAXN} vertices")
    if n == 0:
        return [], [], b""
    cdef CanonState *st = <CanonState *> malloc(sizeof(CanonState))
    if st == NULL:
        raise MemoryError()
    cdef int lab[MAXN]
    cdef char flag[MAXN]
    cdef int path[MAXN]
    cdef int parent[MAXN]
    cdef int i, v, x
    try:
        st.n = n
        st.codelen = n * (n - 1) // 2
        st.have_first = 0
        st.nautos = 0
        st.cap = 64
        st.failed = 0
        st.first_depth = 0
        st.autos = <int *> malloc(sizeof(int) * MAXN * st.cap)
        if st.autos == NULL:
            raise MemoryError()
        for i in range(n * n):
            x = mat[i]
            if x < 0 or x > 255:
                raise ValueError("edge multiplicity out of range")
            st.mat[i] = x
        order = sorted(range(n), key=lambda u: (colors[u], u))
        prev = None
        for i in range(n):
            v = order[i]
            lab[i] = v
            flag[i] = 1 if (i == 0 or colors[v] != prev) else 0
            prev = colors[v]
        with nogil:
            _refine(st, lab, flag)
            _search(st, lab, flag, path, 0)
        if st.failed:
            raise MemoryError()
        for v in range(n):
            parent[v] = v
        for i in range(st.nautos):
            for v in range(n):
                _union(parent, v, st.autos[i * MAXN + v])
        best = [st.best_lab[i] for i in range(n)]
        orbits = [_find(parent, v) for v in range(n)]
        code = bytes([st.best_code[i] for i in range(st.codelen)])
        return best, orbits, code
    finally:
        free(st.autos)
        free(st)


def canon_bits(int n, adj, colors):
    """``canon`` for a simple graph given as neighbour bitmasks."""
    cdef int v, w
    mat = [0] * (n * n)
    for v in range(n):
        row = adj[v]
        for w in range(n):
            if row >> w & 1:
                mat[v * n + w] = 1
    return canon(n, mat, colors)


# ---------------------------------------------------------------------------
# Kuratowski subdivision search

cdef enum:
    KMAX = 64


ctypedef struct RouteCtx:
    uint64_t adj[KMAX]
    int npairs
    int pa[10]
    int pb[10]
    int path[10][KMAX + 2]
    int plen[10]


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _low(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef uint64_t _reach(RouteCtx *c, int a, uint64_t freem) noexcept nogil:
    cdef uint64_t seen = 0, frontier = c.adj[a] & freem, nxt, f
    while frontier:
        seen |= frontier
        nxt = 0
        f = frontier
        while f:
            nxt |= c.adj[_low(f)]
            f &= f - 1
        frontier = nxt & freem & ~seen
    return seen


cdef int _solve(RouteCtx *c, int idx, int cur, uint64_t freem, int plen) noexcept nogil:
    # cur < 0: start routing pair idx; otherwise extend its partial path.
    cdef int a, b, x, j
    cdef uint64_t nb, cand, r
    if cur < 0:
        if idx == c.npairs:
            return 1
        for j in range(idx, c.npairs):
            r = _reach(c, c.pa[j], freem)
            if not (c.adj[c.pb[j]] & r):
                return 0
        c.path[idx][0] = c.pa[idx]
        return _solve(c, idx, c.pa[idx], freem, 1)
    a = c.pa[idx]
    b = c.pb[idx]
    nb = c.adj[cur]
    if cur != a and (nb >> b) & 1:
        c.path[idx][plen] = b
        c.plen[idx] = plen + 1
        if _solve(c, idx + 1, -1, freem, 0):
            return 1
    cand = nb & freem
    while cand:
        x = _low(cand)
        cand &= cand - 1
        c.path[idx][plen] = x
        if _solve(c, idx, x, freem & ~((<uint64_t> 1) << x), plen + 1):
            return 1
    return 0


cdef object _try_branch(RouteCtx *c, str kind, list branch, list pairs, uint64_t full):
    cdef uint64_t bmask = 0, freem
    cdef int i, a, b
    for v in branch:
        bmask |= (<uint64_t> 1) << <int> v
    freem = full & ~bmask
    direct = []
    c.npairs = 0
    for p in pairs:
        a = p[0]
        b = p[1]
        if (c.adj[a] >> b) & 1:
            direct.append([a, b])
        else:
            c.pa[c.npairs] = a
            c.pb[c.npairs] = b
            c.npairs += 1
    if c.npairs > __builtin_popcountll(freem):
        return None
    with nogil:
        i = _solve(c, 0, -1, freem, 0)
    if not i:
        return None
    out = [[c.path[i][j] for j in range(c.plen[i])] for i in range(c.npairs)]
    return kind, branch, direct + out


def kuratowski_search(int n, adj):
    """K5 / K(3,3) subdivision search; see ``_pykernels.kuratowski_search``."""
    from itertools import combinations
    if n > KMAX:
        raise ValueError(f"Kuratowski search supports at most {KMAX} vertices")
    cdef RouteCtx ctx
    cdef uint64_t full = ((<uint64_t> 1) << n) - 1 if n < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    cdef int v
    for v in range(n):
        ctx.adj[v] = adj[v]
    deg = [__builtin_popcountll(ctx.adj[v]) for v in range(n)]
    big = [v for v in range(n) if deg[v] >= 4]
    for s in combinations(big, 5):
        pairs = [(s[i], s[j]) for i in range(5) for j in range(i + 1, 5)]
        found = _try_branch(&ctx, "K5", list(s), pairs, full)
        if found:
            return found
    cubic = [v for v in range(n) if deg[v] >= 3]
    for s in combinations(cubic, 6):
        for rest in combinations(s[1:], 2):
            side_a = [s[0], rest[0], rest[1]]
            side_b = [u for u in s if u not in side_a]
            pairs = [(x, y) for x in side_a for y in side_b]
            found = _try_branch(&ctx, "K33", side_a + side_b, pairs, full)
            if found:
                return found
    return None
