"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Kernel timings call both implementations directly on the same inputs; the
end-to-end rows run an enumeration in a subprocess with each backend
selected through KNOT21_PURE.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

from knot21 import _pykernels
from knot21.catalog import get
from knot21.graph import random_graph

try:
    from knot21 import _ckernels
except ImportError:
    _ckernels = None


def _flat(g):
    n = g.n
    mat = [0] * (n * n)
    for u, v, k in g.weighted_edges():
        mat[u * n + v] = mat[v * n + u] = k
    return mat


def _workloads(seed: int = 1):
    rng = random.Random(seed)
    rand = [random_graph(n, 0.3, rng) for n in (10, 12, 14, 16) for _ in range(50)]
    regular = [get(name).graph for name in ("Petersen", "C14", "H12", "K33")] * 10
    canon_in = [(g.n, _flat(g), [0] * g.n) for g in rand + regular]
    kura_in = [(g.n, g.bitmasks()) for g in (random_graph(11, 0.35, rng) for _ in range(300))]
    return canon_in, kura_in


def _time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for a in args:
            fn(*a)
        best = min(best, time.perf_counter() - t0)
    return best


def _enum_time(pure: bool, degrees: str) -> float:
    env = dict(os.environ, KNOT21_PURE="1" if pure else "0")
    code = ("import time; from knot21.enumeration import DegreeSpec, generate; "
            f"t=time.perf_counter(); n=sum(1 for _ in generate(DegreeSpec.parse({degrees!r}))); "
            "print(time.perf_counter()-t)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--degrees", default="3^12")
    args = ap.parse_args()
    if _ckernels is None:
        sys.exit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    canon_in, kura_in = _workloads()
    rows = [
        ("canon", len(canon_in), _time(_ckernels.canon, canon_in, args.repeat),
         _time(_pykernels.canon, canon_in, args.repeat)),
        ("kuratowski_search", len(kura_in), _time(_ckernels.kuratowski_search, kura_in, args.repeat),
         _time(_pykernels.kuratowski_search, kura_in, args.repeat)),
        (f"generate {args.degrees}", 1, _enum_time(False, args.degrees), _enum_time(True, args.degrees)),
    ]
    print(f"{'workload':<22}{'calls':>7}{'cython s':>12}{'python s':>12}{'speedup':>10}")
    for name, calls, c, p in rows:
        print(f"{name:<22}{calls:>7}{c:>12.4f}{p:>12.4f}{p / c:>9.1f}x")


if __name__ == "__main__":
    main()
