#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Covers the three hot paths: all-pairs crossing validation of a large
disk-lattice drawing, the unit-distance / coincidence band scan, and the
exhaustive lattice-window search. Usage: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

import matchsticks as M
from matchsticks._kernels import pyfallback

try:
    from matchsticks._kernels import _speedups
except ImportError:
    _speedups = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    g, _params = M.gen_disk_lattice(4, 2000)
    pts = g.coords()
    ea = np.array(g.edges)
    seg_args = (pts[ea[:, 0], 0], pts[ea[:, 0], 1],
                pts[ea[:, 1], 0], pts[ea[:, 1], 1], 1e-12)
    band_args = (pts[:, 0], pts[:, 1], 1.0 - 1e-9, 1.0 + 1e-9)
    win_args = (5, 5, 9, 10 ** 9)

    cases = [
        (f"segment_conflicts  (e={g.e})", "segment_conflicts", seg_args),
        (f"distance_band_pairs (n={g.n})", "distance_band_pairs", band_args),
        ("window_best (5x5 choose 9)", "window_best", win_args),
    ]

    print(f"{'kernel':34s} {'python':>12s} {'compiled':>12s} {'speedup':>9s}")
    for label, name, args in cases:
        t_py, r_py = timed(getattr(pyfallback, name), *args)
        if _speedups is None:
            print(f"{label:34s} {t_py * 1e3:10.1f} ms {'n/a':>12s}")
            continue
        t_c, r_c = timed(getattr(_speedups, name), *args)
        agree = "" if r_py == r_c else "  RESULTS DIFFER!"
        print(f"{label:34s} {t_py * 1e3:10.1f} ms {t_c * 1e3:10.1f} ms "
              f"{t_py / t_c:8.1f}x{agree}")


if __name__ == "__main__":
    main()
