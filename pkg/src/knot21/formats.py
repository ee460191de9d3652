"""graph6, the multigraph text format and DOT export."""

from __future__ import annotations

import re

from .graph import Graph, GraphError

HEADER = ">>graph6<<"


class FormatError(GraphError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise FormatError("graph6 supports at most 258047 vertices")


def to_graph6(g: Graph) -> str:
    """graph6 string of the underlying simple graph, vertices taken in sorted order."""
    if g.multi and any(k > 1 for _, _, k in g.weighted_edges()):
        raise FormatError("graph6 cannot represent parallel edges")
    vs = g.vertices
    n = len(vs)
    index = {v: i for i, v in enumerate(vs)}
    edges = {(index[u], index[v]) for u, v in g.edges}
    bits = [1 if (i, j) in edges else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(c < 0 or c > 63 for c in codes):
        raise FormatError(f"malformed graph6 string {text.strip()!r}")
    if codes[0] <= 62:
        n, rest = codes[0], codes[1:]
    elif len(codes) >= 4 and codes[1] <= 62:
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        rest = codes[4:]
    else:
        raise FormatError(f"unsupported graph6 size prefix in {text.strip()!r}")
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise FormatError(f"graph6 body has wrong length for n={n}")
    bits = [(c >> s) & 1 for c in rest for s in range(5, -1, -1)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[need:]):
        raise FormatError("graph6 padding bits must be zero")
    return Graph(range(n), edges)


_EDGE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*(?:,\s*[x×]\s*(\d+))?\s*$")


def to_multitext(g: Graph) -> str:
    """``n;`` header then one ``u-v`` or ``u-v,×k`` line per vertex pair."""
    h = g.normalized()
    lines = [f"{h.n};"]
    for u, v, k in h.weighted_edges():
        lines.append(f"{u}-{v}" if k == 1 else f"{u}-{v},×{k}")
    return "\n".join(lines) + "\n"


def from_multitext(text: str) -> Graph:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].endswith(";"):
        raise FormatError("multigraph text must start with 'n;'")
    try:
        n = int(lines[0][:-1])
    except ValueError:
        raise FormatError(f"bad vertex count {lines[0]!r}") from None
    weighted = []
    for ln in lines[1:]:
        mt = _EDGE.match(ln)
        if not mt:
            raise FormatError(f"bad edge line {ln!r}")
        u, v = int(mt.group(1)), int(mt.group(2))
        if u >= n or v >= n:
            raise FormatError(f"edge {ln!r} references a vertex >= {n}")
        weighted.append((u, v, int(mt.group(3) or 1)))
    return Graph.from_multiplicities(range(n), weighted, multi=True)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in g.vertices)
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graphs(text: str) -> list[Graph]:
    """Parse graph6 lines (blank lines and ``#`` comments skipped)."""
    out = []
    for ln in text.splitlines():
        ln = ln.strip()
        if ln and not ln.startswith("#"):
            out.append(from_graph6(ln))
    return out
