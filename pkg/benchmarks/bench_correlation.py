"""Benchmark: compiled vs pure-Python correlation kernels.

Builds a conic-line code, optionally folds it to scale the word count, and
times the full pairwise cross-correlation sweep on both backends.

    python benchmarks/bench_correlation.py --q 3 --t1 2 --repeat 3
"""

from __future__ import annotations

import argparse
import time

from oockit import _corr_py
from oockit import construct_conic_line_code, fold_time
from oockit.ooc import _pack

try:
    from oockit import _corr
except ImportError:
    _corr = None


def run(kernel, spat, times, starts, T, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = kernel.sweep_cross(spat, times, starts, T)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=3, help="conic-code field order")
    ap.add_argument("--t1", type=int, default=1, help="fold factor to scale the word count")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    code = construct_conic_line_code(args.q)
    if args.t1 > 1:
        code = fold_time(code, args.t1)
    spat, times, starts = _pack(code)
    T = code.shape.T
    n = code.size
    pairs = n * (n - 1) // 2
    print(f"code: {n} words, shape {code.shape.dims}, {pairs} word pairs, T = {T}")

    t_py, r_py = run(_corr_py, spat, times, starts, T, args.repeat)
    print(f"pure python : {t_py:8.3f} s   result {r_py}")
    if _corr is None:
        print("compiled    : not built (install without OOCKIT_PURE to compare)")
        return
    t_cy, r_cy = run(_corr, spat, times, starts, T, args.repeat)
    print(f"compiled    : {t_cy:8.3f} s   result {r_cy}")
    assert r_py == r_cy, "backends disagree"
    print(f"speedup     : {t_py / t_cy:8.1f}x")


if __name__ == "__main__":
    main()
