"""Canonical codes and isomorphism testing."""

from __future__ import annotations

from . import _kernels
from .graph import Graph, GraphError, degree_sequence

MAX_VERTICES = 24


class CanonicalCode(bytes):
    """Relabeling-invariant encoding of a graph: equal codes iff isomorphic.

    Layout: vertex count, then the upper triangle of the canonically
    relabelled multiplicity matrix.
    """

    def __repr__(self) -> str:
        return f"CanonicalCode({self.hex()})"


def _matrix(g: Graph) -> tuple[int, list[int], list[int]]:
    vs = g.vertices
    n = len(vs)
    index = {v: i for i, v in enumerate(vs)}
    mat = [0] * (n * n)
    for u, v, k in g.weighted_edges():
        if k > 255:
            raise GraphError("edge multiplicity above 255")
        i, j = index[u], index[v]
        mat[i * n + j] = mat[j * n + i] = k
    return n, mat, list(vs)


def canonical_labeling(g: Graph) -> tuple[CanonicalCode, list[int], dict[int, int]]:
    """Return ``(code, order, orbit)``.

    ``order[i]`` is the vertex of ``g`` at canonical position ``i``;
    ``orbit[v]`` is the smallest vertex in the automorphism orbit of ``v``.
    """
    n, mat, vs = _matrix(g)
    if n > MAX_VERTICES:
        raise GraphError(f"canonical_form supports at most {MAX_VERTICES} vertices, got {n}")
    lab, orbits, code = _kernels.canon(n, mat, [0] * n)
    order = [vs[i] for i in lab]
    orbit = {vs[i]: vs[orbits[i]] for i in range(n)}
    return CanonicalCode(bytes([n]) + code), order, orbit


def canonical_form(g: Graph) -> CanonicalCode:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """``g`` relabelled into canonical order on ``0..n-1``."""
    _, order, _ = canonical_labeling(g)
    return g.relabel({v: i for i, v in enumerate(order)})


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or degree_sequence(g) != degree_sequence(h):
        return False
    return canonical_form(g) == canonical_form(h)
