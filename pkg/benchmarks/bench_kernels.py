"""Compare the compiled and pure-Python kernels on Cech dimension tables and integer ranks.

Usage: python3 benchmarks/bench_kernels.py [--repeat R] [--max-n N]
"""

import argparse
import random
import time

import numpy as np

from kodaira_kit import kernels
from kodaira_kit.cech_engine import TwistingSheaf, multidegrees


def _time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_cech(max_n, repeat):
    rows = []
    for n in range(1, max_n + 1):
        d = -(n + 3)
        s = TwistingSheaf(n, d)
        pieces = multidegrees(s)
        for q in (0, n):
            t_py, r_py = _time(lambda: kernels.cech_piece_dims(n, q, pieces, backend="python"), repeat)
            t_cy, r_cy = _time(lambda: kernels.cech_piece_dims(n, q, pieces, backend="cython"), repeat)
            assert np.array_equal(r_py, r_cy), "backends disagree"
            rows.append((f"cech n={n} d={d} q={q} pieces={len(pieces)}", t_py, t_cy))
    return rows


def bench_rank(repeat, size=24, count=40):
    rng = random.Random(7)
    mats = [[[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)] for _ in range(count)]
    t_py, r_py = _time(lambda: [kernels.int_rank(m, backend="python") for m in mats], repeat)
    t_cy, r_cy = _time(lambda: [kernels.int_rank(m, backend="cython") for m in mats], repeat)
    assert r_py == r_cy, "backends disagree"
    return [(f"rank {count} x ({size}x{size}) ints", t_py, t_cy)]


def bench_ranks(repeat):
    # 10x10 stays under the int64 Hadamard guard; 24x24 exceeds it and exercises the fallback
    return bench_rank(repeat, size=10, count=400) + bench_rank(repeat, size=24, count=40)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    if not kernels.compiled_available():
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    rows = bench_cech(args.max_n, args.repeat) + bench_ranks(args.repeat)
    width = max(len(r[0]) for r in rows)
    print(f"{'case'.ljust(width)}  {'python s':>10}  {'cython s':>10}  {'speedup':>8}")
    for name, t_py, t_cy in rows:
        print(f"{name.ljust(width)}  {t_py:10.4f}  {t_cy:10.4f}  {t_py / t_cy:8.1f}x")


if __name__ == "__main__":
    main()
