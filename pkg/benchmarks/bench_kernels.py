#!/usr/bin/env python3
"""Time the jit kernels against the pure-Python/numpy fallback.

Run directly: python benchmarks/bench_kernels.py [--repeat N]
The fallback is selected per call through GESSELWALKS_NO_NUMBA, so both
paths run in one process; the first jit call is timed separately since it
includes compilation.
"""

import argparse
import os
import statistics
import time

from gesselwalks import _accel
from gesselwalks.enumeration import count_complete_words, profile_triangle_row
from gesselwalks.walks import count_confined_walks


def timed(fn, repeat):
    samples = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        samples.append(time.perf_counter() - t0)
    return result, min(samples), statistics.median(samples)


def with_fallback(fn):
    def wrapped():
        os.environ[_accel.DISABLE_ENV] = "1"
        try:
            return fn()
        finally:
            os.environ.pop(_accel.DISABLE_ENV, None)

    return wrapped


CASES = [
    ("count words d=2 2n=14", lambda: count_complete_words(2, 7)),
    ("count words d=3 2n=10", lambda: count_complete_words(3, 5)),
    ("profile row n=6", lambda: profile_triangle_row(6)),
    ("walk DP d=2 len=24", lambda: count_confined_walks(2, 24)),
    ("walk DP d=3 len=16", lambda: count_confined_walks(3, 16)),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if not _accel.numba_available():
        print("numba is not installed; timing the fallback only")

    print(f"{'case':28} {'jit best':>12} {'fallback best':>14} {'speedup':>9}")
    for name, fn in CASES:
        if _accel.numba_available():
            _, warm, _ = timed(fn, 1)  # includes compilation
            res_fast, fast, _ = timed(fn, args.repeat)
        else:
            warm = fast = None
            res_fast = None
        res_slow, slow, _ = timed(with_fallback(fn), args.repeat)
        if res_fast is not None and res_fast != res_slow:
            raise SystemExit(f"MISMATCH in {name}: {res_fast} != {res_slow}")
        if fast is None:
            print(f"{name:28} {'-':>12} {slow * 1e3:>12.2f}ms {'-':>9}")
        else:
            print(
                f"{name:28} {fast * 1e3:>10.2f}ms {slow * 1e3:>12.2f}ms "
                f"{slow / fast:>8.1f}x  (first call {warm * 1e3:.0f}ms)"
            )


if __name__ == "__main__":
    main()
