"""The compiled and pure-Python kernels must agree everywhere."""

import random

import numpy as np
import pytest

from kodaira_kit import kernels
from kodaira_kit.cech_engine import TwistingSheaf, cohomology, multidegrees

needs_compiled = pytest.mark.skipif(not kernels.compiled_available(), reason="extension not built")


@needs_compiled
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cech_piece_dims_parity(n):
    for d in (-n - 3, -1, 0, 2):
        pieces = multidegrees(TwistingSheaf(n, d))
        for q in range(n + 1):
            a = kernels.cech_piece_dims(n, q, pieces, backend="python")
            b = kernels.cech_piece_dims(n, q, pieces, backend="cython")
            assert np.array_equal(a, b)


@needs_compiled
def test_int_rank_parity_random():
    rng = random.Random(3)
    for _ in range(300):
        r, c = rng.randint(1, 9), rng.randint(1, 9)
        m = [[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)]
        if rng.random() < 0.3 and r > 1:
            m[-1] = [x * 2 - y for x, y in zip(m[0], m[-2])]
        assert kernels.int_rank(m, backend="python") == kernels.int_rank(m, backend="cython")


@needs_compiled
def test_int_rank_overflow_falls_back():
    big = 1 << 40
    m = [[big, big + 1, 3], [big + 1, big + 2, 5], [1, 1, 1]]
    assert kernels.int_rank(m, backend="cython") == kernels.int_rank(m, backend="python")
    huge = [[1 << 70, 1], [1, 1 << 70]]
    assert kernels.int_rank(huge, backend="cython") == 2


@needs_compiled
def test_cohomology_parity_through_engine():
    s = TwistingSheaf(3, -5)
    a = cohomology(s, 3, backend="python")
    b = cohomology(s, 3, backend="cython")
    assert a.dim == b.dim == 4  # C(-d-1, n) = C(4, 3)
    assert a.graded_pieces == b.graded_pieces


def test_backend_names():
    assert kernels.BACKEND in ("python", "cython")
    with pytest.raises(ValueError):
        kernels.int_rank([[1]], backend="fortran")


def test_pure_python_env_var(monkeypatch):
    import importlib

    monkeypatch.setenv("KODAIRA_KIT_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("KODAIRA_KIT_PURE_PYTHON")
        importlib.reload(kernels)
