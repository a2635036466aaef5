"""Backend equivalence: the compiled kernels must reproduce the pure-Python
results exactly, and both must agree with the scalar reference classifier."""

import math
import random

import numpy as np
import pytest

import matchsticks as M
from matchsticks._kernels import BACKEND, pyfallback
from matchsticks.geometry import classify_segments

try:
    from matchsticks._kernels import _speedups
except ImportError:
    _speedups = None

needs_compiled = pytest.mark.skipif(_speedups is None,
                                    reason="compiled kernels not built")

BACKENDS = [pyfallback] + ([_speedups] if _speedups else [])


def brute_conflicts(x1, y1, x2, y2, tol):
    m = len(x1)
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            code = classify_segments(x1[i], y1[i], x2[i], y2[i],
                                     x1[j], y1[j], x2[j], y2[j], tol)
            if code >= 2:
                out.append((i, j, code))
    return out


def random_segments(rng, m, snap=False):
    pts = []
    for _ in range(m):
        x1 = rng.uniform(-2, 2)
        y1 = rng.uniform(-2, 2)
        ang = rng.uniform(0, 2 * math.pi)
        if snap:
            x1 = round(x1 * 4) / 4
            y1 = round(y1 * 4) / 4
            ang = round(ang / (math.pi / 4)) * (math.pi / 4)
        pts.append((x1, y1, x1 + math.cos(ang), y1 + math.sin(ang)))
    arr = np.array(pts)
    return arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3]


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.split(".")[-1])
def test_segment_conflicts_match_bruteforce(impl):
    rng = random.Random(7)
    for trial in range(6):
        x1, y1, x2, y2 = random_segments(rng, 40, snap=(trial % 2 == 0))
        got = impl.segment_conflicts(x1, y1, x2, y2, 1e-12)
        assert got == sorted(brute_conflicts(x1, y1, x2, y2, 1e-12))


@needs_compiled
def test_backends_identical_on_generated_graphs(small_corpus):
    for name, g in small_corpus.items():
        if g.e < 2:
            continue
        pts = g.coords()
        ea = np.array(g.edges)
        args = (pts[ea[:, 0], 0], pts[ea[:, 0], 1],
                pts[ea[:, 1], 0], pts[ea[:, 1], 1], 1e-12)
        assert _speedups.segment_conflicts(*args) == \
            pyfallback.segment_conflicts(*args), name


@needs_compiled
def test_band_pairs_identical_random():
    rng = np.random.default_rng(3)
    for n in (2, 17, 200):
        xs = rng.uniform(-4, 4, n)
        ys = rng.uniform(-4, 4, n)
        for (lo, hi) in ((0.0, 1e-12), (0.9, 1.1), (0.0, 0.5)):
            assert _speedups.distance_band_pairs(xs, ys, lo, hi) == \
                pyfallback.distance_band_pairs(xs, ys, lo, hi)


def test_band_pairs_bruteforce_oracle():
    rng = np.random.default_rng(11)
    xs = rng.uniform(-2, 2, 60)
    ys = rng.uniform(-2, 2, 60)
    lo, hi = 0.8, 1.2
    expect = sorted((i, j) for i in range(60) for j in range(i + 1, 60)
                    if lo * lo <= (xs[i] - xs[j]) ** 2 + (ys[i] - ys[j]) ** 2
                    <= hi * hi)
    for impl in BACKENDS:
        assert impl.distance_band_pairs(xs, ys, lo, hi) == expect


def brute_window_best(w, n):
    from itertools import combinations
    best = (-1, None)
    for cells in combinations(range(w * w), n):
        s = set(cells)
        e = sum((c % w != w - 1 and c + 1 in s) + (c + w in s) for c in s)
        mask = sum(1 << c for c in cells)
        if e > best[0]:
            best = (e, mask)
    return best


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.split(".")[-1])
def test_window_best_bruteforce(impl):
    for (w, n) in ((3, 4), (3, 6), (4, 5)):
        be, bm = brute_window_best(w, n)
        got = impl.window_best(w, w, n, 10 ** 9)
        assert got[0] == be
        assert got[1] == bm  # lexicographically smallest maximizer
        assert got[3] is True
        assert got[2] == math.comb(w * w, n)


@needs_compiled
def test_window_best_identical():
    for (w, n) in ((4, 7), (5, 9)):
        assert _speedups.window_best(w, w, n, 10 ** 9) == \
            pyfallback.window_best(w, w, n, 10 ** 9)


def test_backend_reported():
    assert BACKEND in ("c", "python")


def test_validate_agrees_across_backends(monkeypatch, small_corpus):
    if _speedups is None:
        pytest.skip("compiled kernels not built")
    import matchsticks._kernels as K
    g = small_corpus["zono5"]
    rep_c = M.validate(g)
    monkeypatch.setattr(K, "segment_conflicts", pyfallback.segment_conflicts)
    monkeypatch.setattr(K, "distance_band_pairs", pyfallback.distance_band_pairs)
    rep_py = M.validate(g)
    assert rep_c.status == rep_py.status
    assert rep_c.violations == rep_py.violations
