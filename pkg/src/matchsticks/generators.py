"""Closed-form constructions emitted as validated matchstick graphs.

Four families: square-lattice pieces, rhombically tiled regular 2k-gons,
the boundary-augmented triangle-free family interpolating between 2k-gons,
and flattened-lattice strips packed in a disk. Plus a rhombus-strip fixture
used by the path machinery tests. Every generator validates its output and
raises :class:`ConstructionError` if its own postconditions fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConstructionError, InfeasibleRadius
from .geometry import DEFAULT_TOL, Point, TolerancePolicy
from .graph import DiskSpec, MatchstickGraph, validate
from . import _kernels


def _checked(g: MatchstickGraph, checks, pol: TolerancePolicy, what: str) -> MatchstickGraph:
    rep = validate(g, pol, checks=checks)
    if not rep.ok:
        raise ConstructionError(
            f"{what}: generated graph failed {rep.failed()}: {rep.violations[:3]}")
    return g


def gen_grid(k: int, pol: TolerancePolicy = DEFAULT_TOL) -> MatchstickGraph:
    """k x k piece of the integer lattice: n = k^2 vertices, 2k(k-1) edges."""
    if k < 1:
        raise ValueError("grid size must be >= 1")
    verts = [(float(x), float(y)) for x in range(k) for y in range(k)]
    idx = lambda x, y: x * k + y
    edges = []
    for x in range(k):
        for y in range(k):
            if y + 1 < k:
                edges.append((idx(x, y), idx(x, y + 1)))
            if x + 1 < k:
                edges.append((idx(x, y), idx(x + 1, y)))
    g = MatchstickGraph(verts, edges)
    checks = {"simple", "unit_lengths", "noncrossing", "triangle_free"}
    if k > 1:
        checks.add("connected")
    return _checked(g, checks, pol, f"gen_grid({k})")


def _zonotope_layout(k: int) -> tuple[list[Point], list[tuple[int, int]], list[int]]:
    """Vertices, edges, and ccw boundary ids of the tiled regular 2k-gon.

    Vertices are the consecutive direction sums: the empty sum (origin) plus
    one point per run [a, b) of the k unit directions at angles j*pi/k. The
    rhombus for direction pair (i, j) has corners [i+1,j), [i,j), [i+1,j+1),
    [i,j+1), which produces the standard staircase tiling.
    """
    dirs = [(math.cos(j * math.pi / k), math.sin(j * math.pi / k)) for j in range(k)]

    def pt(a: int, b: int) -> Point:
        x = 0.0
        y = 0.0
        for l in range(a, b):
            x += dirs[l][0]
            y += dirs[l][1]
        return (x, y)

    runs = [(a, b) for a in range(k) for b in range(a + 1, k + 1)]
    runs.sort()
    ids: dict[tuple[int, int], int] = {}
    verts: list[Point] = [(0.0, 0.0)]
    for a in range(k + 1):
        ids[(a, a)] = 0
    for run in runs:
        ids[run] = len(verts)
        verts.append(pt(*run))

    edges = set()
    for a in range(k):
        for b in range(a, k):
            edges.add((ids[(a, b)], ids[(a, b + 1)]))
    for a in range(1, k):
        for b in range(a + 1, k + 1):
            edges.add((ids[(a, b)], ids[(a - 1, b)]))

    boundary = [ids[(0, j)] for j in range(k + 1)]
    boundary += [ids[(j, k)] for j in range(1, k)]
    return verts, sorted(edges), boundary


def gen_zonotope(k: int, pol: TolerancePolicy = DEFAULT_TOL) -> MatchstickGraph:
    """Regular 2k-gon with unit sides tiled by C(k,2) rhombi; e = k^2."""
    if k < 2:
        raise ValueError("zonotope construction needs k >= 2")
    verts, edges, _ = _zonotope_layout(k)
    g = MatchstickGraph(verts, edges)
    g = _checked(g, {"simple", "unit_lengths", "noncrossing", "connected",
                     "triangle_free"}, pol, f"gen_zonotope({k})")
    n_expect = (k + 1) * k // 2 + 1
    if g.n != n_expect or g.e != k * k:
        raise ConstructionError(
            f"gen_zonotope({k}): got n={g.n}, e={g.e}, expected n={n_expect}, e={k * k}")
    return g


def conjectured_edge_count(n: int) -> int:
    """floor(2n - sqrt(2n - 7/4) - 3/2), the target edge count for n vertices."""
    return math.floor(2 * n - math.sqrt(2 * n - 1.75) - 1.5)


def gen_triangle_free_parts(
        n: int, pol: TolerancePolicy = DEFAULT_TOL
) -> tuple[MatchstickGraph, tuple[tuple[int, int], ...]]:
    """Triangle-free graph on n vertices hitting the conjectured edge count.

    Returns the graph plus the augmentation edges (vertex pairs) added on
    top of the base 2k-gon tiling; the second element is empty when n is
    exactly a tiling size. For intermediate n, a contiguous boundary arc is
    copied outward by a unit vector w, the first copied vertex contributing
    one edge and each further one two (a spoke plus a chain edge), closing a
    strip of rhombi along the boundary.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return MatchstickGraph([(0.0, 0.0)], []), ()

    k = 1
    while (k + 2) * (k + 1) // 2 + 1 <= n:
        k += 1
    n0 = (k + 1) * k // 2 + 1
    q = n - n0

    if k == 1:
        verts: list[Point] = [(0.0, 0.0), (1.0, 0.0)]
        edges: list[tuple[int, int]] = [(0, 1)]
        boundary = [0, 1]
    else:
        verts, edges, boundary = [list(x) for x in _zonotope_layout(k)]

    added: list[tuple[int, int]] = []
    if q > 0:
        w = (math.cos(-math.pi / k), math.sin(-math.pi / k))
        base_ids = boundary[:q]
        new_ids = []
        for t, b in enumerate(base_ids):
            bx, by = verts[b]
            verts.append((bx + w[0], by + w[1]))
            nid = len(verts) - 1
            new_ids.append(nid)
            added.append((b, nid))
            if t > 0:
                added.append((new_ids[t - 1], nid))
        edges.extend(added)

    g = MatchstickGraph(verts, edges)
    g = _checked(g, {"simple", "unit_lengths", "noncrossing", "connected",
                     "triangle_free"}, pol, f"gen_triangle_free({n})")
    want = conjectured_edge_count(n)
    if g.n != n or g.e != want:
        raise ConstructionError(
            f"gen_triangle_free({n}): got n={g.n}, e={g.e}, expected e={want}")
    norm = {(min(i, j), max(i, j)) for (i, j) in added}
    return g, tuple(sorted(norm))


def gen_triangle_free(n: int, pol: TolerancePolicy = DEFAULT_TOL) -> MatchstickGraph:
    """Triangle-free matchstick graph on n vertices with the conjectured maximum edges."""
    return gen_triangle_free_parts(n, pol)[0]


@dataclass(frozen=True)
class DiskLatticeParams:
    """Parameters realized by :func:`gen_disk_lattice`.

    ``m`` is the strip half-width actually used (largest with the lattice
    fitting the vertex budget); ``m_nominal`` records the simple estimate
    floor(n / 2p) for comparison. ``a_dir`` and ``b_dir`` are the two unit step vectors.
    """

    r: float
    n: int
    p: int
    m: int
    m_nominal: int
    eps: float
    delta: float
    a_dir: Point
    b_dir: Point
    lattice_points: int
    padding_points: int


def _lattice_count(p: int, m: int) -> int:
    total = 0
    for u in range(-p, p + 1):
        lo = -m
        if (lo & 1) != (u & 1):
            lo += 1
        if lo > m:
            continue
        total += (m - lo) // 2 + 1
    return total


def gen_disk_lattice(r: float, n: int, pol: TolerancePolicy = DEFAULT_TOL
                     ) -> tuple[MatchstickGraph, DiskLatticeParams]:
    """Flattened-lattice strip with n vertices inside a disk of radius r.

    Lattice points are s*a + t*b for unit vectors a = (delta, eps),
    b = (delta, -eps), with |s+t| <= p = floor(r)-1 and |s-t| <= m, m chosen
    as the largest value keeping the point count within n. Leftover budget
    becomes isolated padding vertices placed in the disk with every distance
    to other vertices at least 0.1 away from 1.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    p = math.floor(r) - 1
    if p < 1:
        raise InfeasibleRadius(f"need r >= 2, got r={r}")

    if _lattice_count(p, 0) > n:
        m = 0
        truncate = True
    else:
        m = 0
        while _lattice_count(p, m + 1) <= n:
            m += 1
        truncate = False

    m_eff = max(m, 1)
    eps = min(1.0 / (4.0 * m_eff), math.sqrt(r * r - p * p) / (2.0 * m_eff))
    delta = math.sqrt(1.0 - eps * eps)

    pts: list[tuple[int, int]] = []
    for u in range(-p, p + 1):
        lo = -m
        if (lo & 1) != (u & 1):
            lo += 1
        for w in range(lo, m + 1, 2):
            pts.append((u, w))
    pts.sort()
    if truncate:
        pts.sort(key=lambda uw: (abs(uw[0]), uw[0], uw[1]))
        pts = sorted(pts[:n])

    ids = {uw: i for i, uw in enumerate(pts)}
    verts: list[Point] = [(u * delta, w * eps) for (u, w) in pts]
    edges = []
    for (u, w) in pts:
        for dw in (1, -1):
            j = ids.get((u + 1, w + dw))
            if j is not None:
                edges.append((ids[(u, w)], j))

    npad = n - len(pts)
    strip_top = m * eps
    for t in range(npad):
        px = 0.2 * (t % 4) - 0.3
        py = strip_top + 1.15 + 0.2 * (t // 4)
        verts.append((px, py))

    disk = DiskSpec((0.0, 0.0), float(r))
    g = MatchstickGraph(verts, edges, disk=disk)
    g = _checked(g, {"simple", "unit_lengths", "noncrossing", "triangle_free",
                     "disk_contained"}, pol, f"gen_disk_lattice({r}, {n})")

    # no unintended unit distances: the edge list must cover every unit pair
    xs = g.coords()[:, 0]
    ys = g.coords()[:, 1]
    unit_pairs = _kernels.distance_band_pairs(
        xs, ys, 1.0 - pol.unit_tol, 1.0 + pol.unit_tol)
    if set(unit_pairs) != set(g.edges):
        raise ConstructionError(
            f"gen_disk_lattice({r}, {n}): unintended unit distances present")

    params = DiskLatticeParams(
        r=float(r), n=n, p=p, m=m,
        m_nominal=n // (2 * p),
        eps=eps, delta=delta,
        a_dir=(delta, eps), b_dir=(delta, -eps),
        lattice_points=len(pts), padding_points=npad)
    return g, params


def gen_rhombus_strip(count: int, theta: float, tilt: float = 0.0,
                      pol: TolerancePolicy = DEFAULT_TOL) -> MatchstickGraph:
    """Single maximal chain of ``count`` congruent rhombi with small angle theta.

    Rails point along tilt + theta; the chain advances along tilt. The strip
    has 2(count+1) vertices and 3*count + 1 edges.
    """
    if count < 1:
        raise ValueError("need count >= 1")
    if not (0.0 < theta <= math.pi / 2.0):
        raise ValueError("theta must lie in (0, pi/2]")
    u = (math.cos(tilt), math.sin(tilt))
    v = (math.cos(tilt + theta), math.sin(tilt + theta))
    verts = []
    for t in range(count + 1):
        verts.append((t * u[0], t * u[1]))
    for t in range(count + 1):
        verts.append((t * u[0] + v[0], t * u[1] + v[1]))
    b0 = count + 1
    edges = [(t, b0 + t) for t in range(count + 1)]
    edges += [(t, t + 1) for t in range(count)]
    edges += [(b0 + t, b0 + t + 1) for t in range(count)]
    g = MatchstickGraph(verts, edges)
    return _checked(g, {"simple", "unit_lengths", "noncrossing", "connected",
                        "triangle_free"}, pol, f"gen_rhombus_strip({count})")
