"""The compiled and pure-Python kernels must agree bit for bit."""

from __future__ import annotations

import random

import pytest

from knot21 import _kernels, _pykernels
from knot21.graph import random_graph

ck = pytest.importorskip("knot21._ckernels")


def _flat(g):
    n = g.n
    mat = [0] * (n * n)
    for u, v, k in g.weighted_edges():
        mat[u * n + v] = mat[v * n + u] = k
    return mat


def test_backend_reported():
    assert _kernels.BACKEND in ("cython", "python")


def test_canon_parity():
    rng = random.Random(5)
    for _ in range(1500):
        n = rng.randint(0, 12)
        g = random_graph(n, rng.random(), rng)
        colors = [rng.randint(0, 2) for _ in range(n)]
        assert ck.canon(n, _flat(g), colors) == _pykernels.canon(n, _flat(g), colors)
        assert ck.canon_bits(n, g.bitmasks(), colors) == _pykernels.canon_bits(n, g.bitmasks(), colors)


def test_kuratowski_parity():
    rng = random.Random(6)
    for _ in range(800):
        n = rng.randint(5, 11)
        g = random_graph(n, rng.uniform(0.3, 0.8), rng)
        a = ck.kuratowski_search(n, g.bitmasks())
        b = _pykernels.kuratowski_search(n, g.bitmasks())
        assert (a is None) == (b is None)
        if a is not None:
            assert a[0] == b[0]
