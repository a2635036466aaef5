"""Pure-Python kernels (numpy-accelerated where it pays off).

Each function here has a compiled twin in ``_speedups.pyx`` with identical
output for identical input: candidate pairs are prefiltered coarsely and
then decided by the exact same squared-distance arithmetic, and results are
returned sorted, so either backend can serve any caller.
"""

from __future__ import annotations

import numpy as np

from ..geometry import classify_segments

_BLOCK = 512


def segment_conflicts(x1, y1, x2, y2, geom_tol: float) -> list[tuple[int, int, int]]:
    """All segment pairs (i < j) whose relation violates planarity.

    Returns (i, j, code) triples with code in {2: proper_cross, 3: overlap,
    4: endpoint_on_interior}, sorted by (i, j).
    """
    x1 = np.asarray(x1, dtype=np.float64)
    y1 = np.asarray(y1, dtype=np.float64)
    x2 = np.asarray(x2, dtype=np.float64)
    y2 = np.asarray(y2, dtype=np.float64)
    m = x1.shape[0]
    if m < 2:
        return []
    pad = geom_tol
    minx = np.minimum(x1, x2) - pad
    maxx = np.maximum(x1, x2) + pad
    miny = np.minimum(y1, y2) - pad
    maxy = np.maximum(y1, y2) + pad

    out: list[tuple[int, int, int]] = []
    for lo in range(0, m, _BLOCK):
        hi = min(lo + _BLOCK, m)
        # bounding-box overlap of rows lo:hi against all columns j > i
        ov = ((minx[lo:hi, None] <= maxx[None, :])
              & (maxx[lo:hi, None] >= minx[None, :])
              & (miny[lo:hi, None] <= maxy[None, :])
              & (maxy[lo:hi, None] >= miny[None, :]))
        ii, jj = np.nonzero(ov)
        ii = ii + lo
        keep = jj > ii
        for i, j in zip(ii[keep].tolist(), jj[keep].tolist()):
            code = classify_segments(x1[i], y1[i], x2[i], y2[i],
                                     x1[j], y1[j], x2[j], y2[j], geom_tol)
            if code >= 2:
                out.append((i, j, code))
    out.sort()
    return out


def distance_band_pairs(xs, ys, lo: float, hi: float) -> list[tuple[int, int]]:
    """All point pairs (i < j) with lo <= dist <= hi, sorted by (i, j).

    Comparison is done on squared distances.
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    n = xs.shape[0]
    if n < 2:
        return []
    lo2 = lo * lo
    hi2 = hi * hi
    out: list[tuple[int, int]] = []
    for b in range(0, n, _BLOCK):
        e = min(b + _BLOCK, n)
        dx = xs[b:e, None] - xs[None, :]
        dy = ys[b:e, None] - ys[None, :]
        d2 = dx * dx + dy * dy
        hit = (d2 >= lo2) & (d2 <= hi2)
        ii, jj = np.nonzero(hit)
        ii = ii + b
        keep = jj > ii
        out.extend(zip(ii[keep].tolist(), jj[keep].tolist()))
    out.sort()
    return out


def window_best(w: int, h: int, n: int, limit: int) -> tuple[int, int, int, bool]:
    """Best axis-adjacency edge count over n-point subsets of a w x h grid.

    Enumerates subsets as bitmasks in increasing numeric order (Gosper), so
    the reported best mask is the lexicographically smallest maximizer.
    Returns (best_edges, best_mask, examined, complete); stops after
    ``limit`` masks when the space is larger than the budget.
    """
    cells = w * h
    if n < 0 or n > cells:
        return (0, 0, 0, True)
    if n == 0:
        return (0, 0, 1, True)
    right_col = 0
    for r in range(h):
        right_col |= 1 << (r * w + (w - 1))
    not_right = ((1 << cells) - 1) & ~right_col

    mask = (1 << n) - 1
    top = 1 << cells
    best_e = -1
    best_mask = 0
    examined = 0
    complete = True
    while mask < top:
        if examined >= limit:
            complete = False
            break
        examined += 1
        horiz = (mask & not_right) & (mask >> 1)
        vert = mask & (mask >> w)
        e = horiz.bit_count() + vert.bit_count()
        if e > best_e:
            best_e = e
            best_mask = mask
        # Gosper's hack: next mask with the same popcount
        c = mask & -mask
        r = mask + c
        mask = (((r ^ mask) >> 2) // c) | r
    return (best_e, best_mask, examined, complete)
