"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise, or
when ``KODAIRA_KIT_PURE_PYTHON`` is set to a non-empty value other than
``0``, the pure-Python ``_pykernels`` are used. Both expose the same API and
compute the same numbers; the compiled one may return -1 for inputs whose
int64 elimination it cannot certify, and those are recomputed here in Python.
"""

import os

import numpy as np

from . import _pykernels


def _load_compiled():
    if os.environ.get("KODAIRA_KIT_PURE_PYTHON", "") not in ("", "0"):
        return None
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


_compiled = _load_compiled()
BACKEND = _compiled.BACKEND if _compiled is not None else _pykernels.BACKEND


def compiled_available():
    try:
        from . import _ckernels  # noqa: F401
    except ImportError:
        return False
    return True


def int_rank(rows, backend=None):
    """Exact rank of an integer matrix given as a list of rows of Python ints."""
    mod = _pick(backend)
    if not rows or not rows[0]:
        return 0
    if mod is _pykernels:
        return _pykernels.bareiss_rank(rows)
    limit = 1 << 62
    if any(abs(x) >= limit for row in rows for x in row):
        return _pykernels.bareiss_rank(rows)
    r = mod.int_rank(np.ascontiguousarray(rows, dtype=np.int64))
    if r < 0:
        return _pykernels.bareiss_rank(rows)
    return r


def cech_piece_dims(n, q, multidegrees, backend=None):
    """Per-piece Cech dimensions for an ``(m, n+1)`` int array of multidegrees."""
    mod = _pick(backend)
    arr = np.ascontiguousarray(multidegrees, dtype=np.int64).reshape(-1, n + 1)
    out = np.zeros(arr.shape[0], dtype=np.int64)
    if arr.shape[0] == 0:
        return out
    if mod is _pykernels:
        _pykernels.cech_piece_dims(n, q, arr.tolist(), out)
        return out
    mod.cech_piece_dims(n, q, arr, out)
    bad = np.flatnonzero(out < 0)
    if bad.size:
        groups = _pykernels._masks_by_size(n + 1)
        for i in bad:
            out[i] = _pykernels.piece_dim(n + 1, q, arr[i].tolist(), groups)
    return out


def _pick(backend):
    if backend is None:
        return _compiled if _compiled is not None else _pykernels
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _compiled is None:
            from . import _ckernels

            return _ckernels
        return _compiled
    raise ValueError(f"unknown kernel backend {backend!r}")
