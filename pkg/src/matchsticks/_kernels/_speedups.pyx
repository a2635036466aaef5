# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: segment-pair conflicts, distance-band pairs, and the
exhaustive lattice-window search. Semantics mirror ``pyfallback`` exactly:
the same squared-distance arithmetic decides every candidate, so both
backends return identical results."""

from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    static inline int _msk_popcountll(unsigned long long x) {
    #if defined(__GNUC__) || defined(__clang__)
        return __builtin_popcountll(x);
    #else
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    #endif
    }
    """
    int _msk_popcountll(unsigned long long x) nogil


cdef inline double _pseg2(double px, double py, double ax, double ay,
                          double bx, double by) nogil:
    cdef double dx = bx - ax
    cdef double dy = by - ay
    cdef double l2 = dx * dx + dy * dy
    cdef double t, ex, ey
    if l2 <= 0.0:
        ex = px - ax
        ey = py - ay
        return ex * ex + ey * ey
    t = ((px - ax) * dx + (py - ay) * dy) / l2
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    ex = px - (ax + t * dx)
    ey = py - (ay + t * dy)
    return ex * ex + ey * ey


cdef int _classify(double x1, double y1, double x2, double y2,
                   double x3, double y3, double x4, double y4,
                   double tol) nogil:
    cdef double t2 = tol * tol
    cdef double dxa, dya
    cdef bint c11, c12, c21, c22
    cdef int ncoinc
    cdef double oax, oay, obx, oby
    cdef double ax, ay, bx, by, la2, lb2, ta2, tb2, d1, d2, d3, d4
    cdef double s1, s2, tmp, lo, hi
    cdef bint a_str, b_str

    dxa = x1 - x3
    dya = y1 - y3
    c11 = dxa * dxa + dya * dya <= t2
    dxa = x1 - x4
    dya = y1 - y4
    c12 = dxa * dxa + dya * dya <= t2
    dxa = x2 - x3
    dya = y2 - y3
    c21 = dxa * dxa + dya * dya <= t2
    dxa = x2 - x4
    dya = y2 - y4
    c22 = dxa * dxa + dya * dya <= t2

    ncoinc = (1 if c11 else 0) + (1 if c12 else 0) \
        + (1 if c21 else 0) + (1 if c22 else 0)
    if ncoinc >= 2:
        return 3
    if ncoinc == 1:
        if c11:
            oax = x2; oay = y2; obx = x4; oby = y4
        elif c12:
            oax = x2; oay = y2; obx = x3; oby = y3
        elif c21:
            oax = x1; oay = y1; obx = x4; oby = y4
        else:
            oax = x1; oay = y1; obx = x3; oby = y3
        if (_pseg2(oax, oay, x3, y3, x4, y4) <= t2
                or _pseg2(obx, oby, x1, y1, x2, y2) <= t2):
            return 3
        return 1

    ax = x2 - x1
    ay = y2 - y1
    bx = x4 - x3
    by = y4 - y3
    la2 = ax * ax + ay * ay
    lb2 = bx * bx + by * by
    ta2 = t2 * la2
    tb2 = t2 * lb2
    d1 = ax * (y3 - y1) - ay * (x3 - x1)
    d2 = ax * (y4 - y1) - ay * (x4 - x1)
    d3 = bx * (y1 - y3) - by * (x1 - x3)
    d4 = bx * (y2 - y3) - by * (x2 - x3)

    if d1 * d1 <= ta2 and d2 * d2 <= ta2:
        s1 = ((x3 - x1) * ax + (y3 - y1) * ay) / la2
        s2 = ((x4 - x1) * ax + (y4 - y1) * ay) / la2
        if s1 > s2:
            tmp = s1; s1 = s2; s2 = tmp
        lo = s1 if s1 > 0.0 else 0.0
        hi = s2 if s2 < 1.0 else 1.0
        if hi > lo and (hi - lo) * (hi - lo) * la2 > t2:
            return 3
        return 0

    if (_pseg2(x1, y1, x3, y3, x4, y4) <= t2
            or _pseg2(x2, y2, x3, y3, x4, y4) <= t2
            or _pseg2(x3, y3, x1, y1, x2, y2) <= t2
            or _pseg2(x4, y4, x1, y1, x2, y2) <= t2):
        return 4

    a_str = (d1 > 0.0 and d1 * d1 > ta2 and d2 < 0.0 and d2 * d2 > ta2) or \
            (d1 < 0.0 and d1 * d1 > ta2 and d2 > 0.0 and d2 * d2 > ta2)
    b_str = (d3 > 0.0 and d3 * d3 > tb2 and d4 < 0.0 and d4 * d4 > tb2) or \
            (d3 < 0.0 and d3 * d3 > tb2 and d4 > 0.0 and d4 * d4 > tb2)
    if a_str and b_str:
        return 2
    return 0


def segment_conflicts(x1_in, y1_in, x2_in, y2_in, double geom_tol):
    """All segment pairs (i < j) violating planarity, sorted by (i, j)."""
    import numpy as np
    cdef double[::1] x1 = np.ascontiguousarray(x1_in, dtype=np.float64)
    cdef double[::1] y1 = np.ascontiguousarray(y1_in, dtype=np.float64)
    cdef double[::1] x2 = np.ascontiguousarray(x2_in, dtype=np.float64)
    cdef double[::1] y2 = np.ascontiguousarray(y2_in, dtype=np.float64)
    cdef Py_ssize_t m = x1.shape[0]
    out = []
    if m < 2:
        return out

    cdef double *minx = <double *> malloc(m * sizeof(double))
    cdef double *maxx = <double *> malloc(m * sizeof(double))
    cdef double *miny = <double *> malloc(m * sizeof(double))
    cdef double *maxy = <double *> malloc(m * sizeof(double))
    cdef long *order_c = <long *> malloc(m * sizeof(long))
    if minx == NULL or maxx == NULL or miny == NULL or maxy == NULL \
            or order_c == NULL:
        free(<void *> minx)
        free(<void *> maxx)
        free(<void *> miny)
        free(<void *> maxy)
        free(<void *> order_c)
        raise MemoryError()
    cdef Py_ssize_t k, a, b
    cdef double pad = geom_tol
    for k in range(m):
        minx[k] = (x1[k] if x1[k] < x2[k] else x2[k]) - pad
        maxx[k] = (x1[k] if x1[k] > x2[k] else x2[k]) + pad
        miny[k] = (y1[k] if y1[k] < y2[k] else y2[k]) - pad
        maxy[k] = (y1[k] if y1[k] > y2[k] else y2[k]) + pad

    order_py = sorted(range(m), key=lambda q: minx[q])
    for k in range(m):
        order_c[k] = order_py[k]

    cdef Py_ssize_t oi, oj, i, j, code
    with nogil:
        for oi in range(m):
            i = order_c[oi]
            for oj in range(oi + 1, m):
                j = order_c[oj]
                if minx[j] > maxx[i]:
                    break
                if miny[j] > maxy[i] or maxy[j] < miny[i]:
                    continue
                a = i if i < j else j
                b = j if i < j else i
                code = _classify(x1[a], y1[a], x2[a], y2[a],
                                 x1[b], y1[b], x2[b], y2[b], geom_tol)
                if code >= 2:
                    with gil:
                        out.append((int(a), int(b), int(code)))
    free(<void *> minx)
    free(<void *> maxx)
    free(<void *> miny)
    free(<void *> maxy)
    free(<void *> order_c)
    out.sort()
    return out


def distance_band_pairs(xs_in, ys_in, double lo, double hi):
    """All point pairs (i < j) with lo <= dist <= hi, sorted by (i, j)."""
    import numpy as np
    xs_arr = np.ascontiguousarray(xs_in, dtype=np.float64)
    cdef double[::1] xs = xs_arr
    cdef double[::1] ys = np.ascontiguousarray(ys_in, dtype=np.float64)
    cdef Py_ssize_t n = xs.shape[0]
    out = []
    if n < 2:
        return out
    order_np = np.argsort(xs_arr, kind="stable")
    cdef long[::1] order = np.ascontiguousarray(order_np, dtype=np.int64)
    cdef double lo2 = lo * lo
    cdef double hi2 = hi * hi
    cdef Py_ssize_t oi, oj, i, j
    cdef double dx, dy, d2
    with nogil:
        for oi in range(n):
            i = order[oi]
            for oj in range(oi + 1, n):
                j = order[oj]
                dx = xs[j] - xs[i]
                if dx > hi:
                    break
                dy = ys[j] - ys[i]
                d2 = dx * dx + dy * dy
                if lo2 <= d2 <= hi2:
                    with gil:
                        if i < j:
                            out.append((int(i), int(j)))
                        else:
                            out.append((int(j), int(i)))
    out.sort()
    return out


def window_best(int w, int h, int n, long long limit):
    """Best edge count over n-cell subsets of a w x h grid (Gosper order)."""
    cdef int cells = w * h
    if cells > 62:
        raise ValueError("window too large for a 64-bit mask")
    if n < 0 or n > cells:
        return (0, 0, 0, True)
    if n == 0:
        return (0, 0, 1, True)
    cdef unsigned long long right_col = 0
    cdef int r
    for r in range(h):
        right_col |= (<unsigned long long> 1) << (r * w + (w - 1))
    cdef unsigned long long not_right = \
        (((<unsigned long long> 1) << cells) - 1) & ~right_col

    cdef unsigned long long mask = ((<unsigned long long> 1) << n) - 1
    cdef unsigned long long top = (<unsigned long long> 1) << cells
    cdef int best_e = -1
    cdef unsigned long long best_mask = 0
    cdef long long examined = 0
    cdef bint complete = True
    cdef unsigned long long horiz, vert, c, rr
    cdef int e
    with nogil:
        while mask < top:
            if examined >= limit:
                complete = False
                break
            examined += 1
            horiz = (mask & not_right) & (mask >> 1)
            vert = mask & (mask >> w)
            e = _msk_popcountll(horiz) + _msk_popcountll(vert)
            if e > best_e:
                best_e = e
                best_mask = mask
            c = mask & (~mask + 1)
            rr = mask + c
            mask = (((rr ^ mask) >> 2) / c) | rr
    return (best_e, int(best_mask), int(examined), bool(complete))
