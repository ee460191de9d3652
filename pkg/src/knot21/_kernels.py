"""Kernel backend selection.

The compiled extension is used when importable; ``KNOT21_PURE=1`` forces
the pure-Python kernels.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("KNOT21_PURE", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

canon = _impl.canon
canon_bits = _impl.canon_bits
kuratowski_search = _impl.kuratowski_search

__all__ = ["BACKEND", "canon", "canon_bits", "kuratowski_search"]
