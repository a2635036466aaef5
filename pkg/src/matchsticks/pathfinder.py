"""Edge-neighborhood graph, monotone paths, hats, and the Extend-Path search.

The neighborhood graph N has one node per edge; two nodes are adjacent when
their edges bound a common face (N is the line graph of the dual). BFS over
N uses face exhaustion: the edges of one face form a clique, so a face needs
to be expanded only once, keeping every query linear in the face structure.

Extend-Path grows an x-monotone path from a start edge, repeatedly flattening
"hats" (rhombic faces whose two lower edges lie on the path) and extending
left or right, until some path edge has a non-rhombic face above it. The
convexity number c(P) counts edge pairs (left, right) whose slopes increase;
a hat replacement decreases it by exactly one, which bounds the work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (AmbiguousHull, Disconnected, NotMonotone, NotReduced,
                     Unreachable)
from .faces import (FaceClass, FaceDecomposition, FaceKind, classify_faces,
                    enumerate_faces)
from .geometry import DEFAULT_TOL, TolerancePolicy
from .graph import MatchstickGraph, is_connected


@dataclass(frozen=True)
class NeighborhoodGraph:
    """Co-face adjacency over the edges of a graph.

    Adjacency is kept implicit through the face edge lists (one clique per
    face); ``neighbors`` materializes a single node's neighborhood with the
    smallest face id realizing each adjacency.
    """

    edge_count: int
    face_edge_ids: tuple[tuple[int, ...], ...]
    edge_faces: tuple[tuple[int, ...], ...]

    def neighbors(self, edge_id: int) -> list[tuple[int, int]]:
        """Sorted (neighbor edge id, face label) pairs for one node."""
        best: dict[int, int] = {}
        for fid in self.edge_faces[edge_id]:
            for other in self.face_edge_ids[fid]:
                if other != edge_id and (other not in best or fid < best[other]):
                    best.setdefault(other, fid)
        return sorted(best.items())

    def adjacency_pairs(self) -> set[tuple[int, int]]:
        """All adjacent node pairs (i < j); quadratic in face sizes, for tests."""
        pairs: set[tuple[int, int]] = set()
        for ids in self.face_edge_ids:
            for a in range(len(ids)):
                for b in range(a + 1, len(ids)):
                    pairs.add((ids[a], ids[b]))
        return pairs


def build_neighborhood(g: MatchstickGraph, fd: FaceDecomposition | None = None,
                       pol: TolerancePolicy = DEFAULT_TOL) -> NeighborhoodGraph:
    """Neighborhood graph of a connected graph's edges (outer face included)."""
    if not is_connected(g):
        raise Disconnected("neighborhood graph requires a connected graph")
    if fd is None:
        fd = enumerate_faces(g, pol)
    return NeighborhoodGraph(
        edge_count=g.e,
        face_edge_ids=fd.face_edge_ids,
        edge_faces=fd.edge_faces)


def _bfs_levels(N: NeighborhoodGraph, sources: list[int]):
    """Yield (level, nodes-at-level) with face-exhaustion expansion."""
    dist: dict[int, int] = {s: 0 for s in sources}
    frontier = sorted(dist)
    used_faces: set[int] = set()
    level = 0
    yield level, frontier
    while frontier:
        level += 1
        nxt: list[int] = []
        for e in frontier:
            for fid in N.edge_faces[e]:
                if fid in used_faces:
                    continue
                used_faces.add(fid)
                for other in N.face_edge_ids[fid]:
                    if other not in dist:
                        dist[other] = level
                        nxt.append(other)
        if not nxt:
            return
        frontier = sorted(nxt)
        yield level, frontier


def edge_distance(N: NeighborhoodGraph, e1: int, e2: int) -> int:
    """BFS hop count between two edge nodes of N."""
    for level, nodes in _bfs_levels(N, [e1]):
        if e2 in nodes:
            return level
    raise Unreachable(f"edges {e1} and {e2} lie in different components of N")


def nearest_irregular(N: NeighborhoodGraph, irregular, e: int) -> tuple[int, int]:
    """Closest irregular edge to ``e`` (ties broken by smallest edge id).

    ``irregular`` is a per-edge boolean sequence; returns (edge id, distance),
    distance 0 when ``e`` itself is irregular.
    """
    for level, nodes in _bfs_levels(N, [e]):
        hits = [x for x in nodes if irregular[x]]
        if hits:
            return (min(hits), level)
    raise Unreachable(f"no irregular edge reachable from edge {e}")


def irregular_distances(N: NeighborhoodGraph, irregular) -> list[int | None]:
    """Distance from every edge to its nearest irregular edge (multi-source BFS)."""
    out: list[int | None] = [None] * N.edge_count
    sources = [k for k in range(N.edge_count) if irregular[k]]
    if not sources:
        return out
    for level, nodes in _bfs_levels(N, sources):
        for x in nodes:
            out[x] = level
    return out


# ---------------------------------------------------------------------------
# Monotone paths
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonotonePath:
    """Path with strictly increasing x-coordinates along its vertices."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_ids)


def _make_path(g: MatchstickGraph, xs, vertex_ids, pol: TolerancePolicy) -> MonotonePath:
    vs = tuple(int(v) for v in vertex_ids)
    if len(vs) < 2:
        raise NotMonotone("a path needs at least two vertices")
    eidx = g.edge_index()
    edge_ids = []
    for u, v in zip(vs, vs[1:]):
        key = (min(u, v), max(u, v))
        if key not in eidx:
            raise NotMonotone(f"consecutive vertices {u}, {v} are not adjacent")
        if xs[v] - xs[u] <= pol.geom_tol:
            raise NotMonotone(f"x-coordinates do not increase at {u} -> {v}")
        edge_ids.append(eidx[key])
    return MonotonePath(vs, tuple(edge_ids))


def monotone_path(g: MatchstickGraph, vertex_ids,
                  pol: TolerancePolicy = DEFAULT_TOL) -> MonotonePath:
    """Validated monotone path through the given vertices; NotMonotone otherwise."""
    return _make_path(g, [p[0] for p in g.vertices], vertex_ids, pol)


def is_monotone(g: MatchstickGraph, vertex_ids,
                pol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True iff consecutive vertices are adjacent and x strictly increases."""
    try:
        _make_path(g, [p[0] for p in g.vertices], vertex_ids, pol)
    except NotMonotone:
        return False
    return True


def _slopes(xs, ys, path: MonotonePath) -> list[float]:
    out = []
    for u, v in zip(path.vertices, path.vertices[1:]):
        out.append((ys[v] - ys[u]) / (xs[v] - xs[u]))
    return out


def convexity_number_of_slopes(slopes, tol: float = 0.0) -> int:
    c = 0
    for i in range(len(slopes)):
        si = slopes[i]
        for j in range(i + 1, len(slopes)):
            if slopes[j] - si > tol:
                c += 1
    return c


def convexity_number(g: MatchstickGraph, path, pol: TolerancePolicy = DEFAULT_TOL) -> int:
    """Number of edge pairs (left, right) of the path whose slopes increase.

    Zero means the slopes are non-increasing along the path (the shape of an
    upper hull); the maximum l(l-1)/2 means they are non-decreasing. Under
    this convention a hat replacement decreases the value by exactly one.
    Parallel edges are a tie, not an increase: the right slope must exceed
    the left one by more than geom_tol to count, which keeps the bookkeeping
    exact on drawings full of translated edges.
    """
    xs = [p[0] for p in g.vertices]
    ys = [p[1] for p in g.vertices]
    if isinstance(path, MonotonePath):
        mp = _make_path(g, xs, path.vertices, pol)
    else:
        mp = _make_path(g, xs, path, pol)
    return convexity_number_of_slopes(_slopes(xs, ys, mp), pol.geom_tol)


# ---------------------------------------------------------------------------
# Hats and Extend-Path
# ---------------------------------------------------------------------------

def _face_above(g: MatchstickGraph, fd: FaceDecomposition, xs, u: int, v: int) -> int:
    """Face on the upper side of edge {u, v}: the one using the rightward dedge."""
    if xs[u] > xs[v]:
        u, v = v, u
    return fd.dedge_face[(u, v)]


def _lower_hull(g: MatchstickGraph, fd: FaceDecomposition, xs, ys,
                face_id: int, pol: TolerancePolicy):
    """Bottom corner and lower-hull edges (left, right) of a rhombic face.

    Corners must have four distinct x-coordinates; otherwise AmbiguousHull.
    Returns (leftmost, bottom, rightmost, lower_left_edge, lower_right_edge)
    as vertex ids and edge ids.
    """
    corners = list(dict.fromkeys(u for (u, _v) in fd.walks[face_id]))
    if len(corners) != 4:
        raise AmbiguousHull(f"face {face_id} does not have 4 distinct corners")
    order = sorted(corners, key=lambda q: xs[q])
    for a, b in zip(order, order[1:]):
        if xs[b] - xs[a] <= pol.geom_tol:
            raise AmbiguousHull(
                f"face {face_id} corners {a}, {b} share an x-coordinate")
    v0, vm1, vm2, v3 = order
    # exactly one middle corner lies below the chord v0 -> v3
    cx = xs[v3] - xs[v0]
    cy = ys[v3] - ys[v0]
    below = []
    for q in (vm1, vm2):
        cross = cx * (ys[q] - ys[v0]) - cy * (xs[q] - xs[v0])
        if cross < 0.0:
            below.append(q)
    if len(below) != 1:
        raise AmbiguousHull(f"face {face_id} has no unambiguous bottom corner")
    bottom = below[0]
    eidx = g.edge_index()
    e_left = eidx[(min(v0, bottom), max(v0, bottom))]
    e_right = eidx[(min(bottom, v3), max(bottom, v3))]
    return v0, bottom, v3, e_left, e_right


def find_hat(g: MatchstickGraph, path, fd: FaceDecomposition | None = None,
             classes: dict[int, FaceClass] | None = None,
             pol: TolerancePolicy = DEFAULT_TOL) -> int | None:
    """Leftmost rhombic face whose two lower-hull edges are consecutive in the path."""
    xs = [p[0] for p in g.vertices]
    ys = [p[1] for p in g.vertices]
    if fd is None:
        fd = enumerate_faces(g, pol)
    if classes is None:
        classes = classify_faces(g, fd, None, pol)
    if isinstance(path, MonotonePath):
        mp = _make_path(g, xs, path.vertices, pol)
    else:
        mp = _make_path(g, xs, path, pol)
    hit = _find_hat_fast(g, fd, classes, xs, ys, list(mp.vertices), pol)
    return hit[0] if hit else None


def _find_hat_fast(g, fd, classes, xs, ys, verts: list[int], pol):
    """(face id, position j) of the leftmost hat on the vertex list, or None."""
    for j in range(len(verts) - 2):
        u, mid, w = verts[j], verts[j + 1], verts[j + 2]
        fa = _face_above(g, fd, xs, u, mid)
        if fa != fd.outer_face_id and fa == _face_above(g, fd, xs, mid, w) \
                and classes[fa].is_rhombic:
            v0, bottom, v3, e_left, e_right = _lower_hull(g, fd, xs, ys, fa, pol)
            if bottom != mid or v0 != u or v3 != w:
                raise AmbiguousHull(
                    f"face {fa} repeats above non-hull path edges")
            return fa, j
    return None


@dataclass
class ExtendPathTrace:
    """Full step log of one Extend-Path run."""

    alpha: tuple[int, int]
    rotation: float
    events: list[dict] = field(default_factory=list)
    hat_steps_per_phase: dict[int, int] = field(default_factory=dict)
    status: str = "running"
    found_edge: tuple[int, int] | None = None
    path_vertices: tuple[int, ...] = ()
    total_steps: int = 0
    exhausted_reason: str | None = None

    @property
    def path_length(self) -> int:
        return max(len(self.path_vertices) - 1, 0)

    @property
    def found(self) -> bool:
        return self.status == "found_irregular"

    def to_json_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "rotation": self.rotation,
            "events": self.events,
            "hat_steps_per_phase": {str(k): v for k, v
                                    in sorted(self.hat_steps_per_phase.items())},
            "status": self.status,
            "found_edge": list(self.found_edge) if self.found_edge else None,
            "path_vertices": list(self.path_vertices),
            "path_length": self.path_length,
            "total_steps": self.total_steps,
            "exhausted_reason": self.exhausted_reason,
        }


def extend_path(g: MatchstickGraph, alpha, r: float,
                max_steps: int | None = None,
                pol: TolerancePolicy = DEFAULT_TOL) -> ExtendPathTrace:
    """Run the monotone-path search from edge ``alpha`` on a reduced graph.

    ``alpha`` is an edge id or a vertex pair. The frame is rotated so alpha
    is horizontal (the rotation is recorded in the trace). Hats are
    flattened to exhaustion, then the faces above the path edges are
    scanned left to right: a non-rhombic face stops the run and returns the
    irregular edge below it; otherwise the path extends by one edge and the
    cycle repeats. On a properly reduced graph the run always stops at an
    irregular edge; ``max_steps`` (default n*(n+1)) guards non-termination.
    """
    if isinstance(alpha, int):
        alpha_id = alpha
        if not (0 <= alpha_id < g.e):
            raise ValueError(f"edge id {alpha_id} out of range")
    else:
        alpha_id = g.edge_id(*alpha)
    if max_steps is None:
        max_steps = g.n * (g.n + 1)
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")

    (ai, aj) = g.edges[alpha_id]
    pa, pb = g.vertices[ai], g.vertices[aj]
    rotation = -math.atan2(pb[1] - pa[1], pb[0] - pa[0])
    ca, sa = math.cos(rotation), math.sin(rotation)
    xs = [p[0] * ca - p[1] * sa for p in g.vertices]
    ys = [p[0] * sa + p[1] * ca for p in g.vertices]

    fd = enumerate_faces(g, pol)
    classes = classify_faces(g, fd, r, pol)
    for fc in classes.values():
        if fc.kind in (FaceKind.TRIANGLE, FaceKind.FAT_RHOMBUS):
            raise NotReduced(
                f"graph still contains a {fc.kind.value} face; reduce it first")

    trace = ExtendPathTrace(alpha=g.edges[alpha_id], rotation=rotation)
    verts = [ai, aj] if xs[ai] < xs[aj] else [aj, ai]
    eidx = g.edge_index()

    def slopes():
        return [(ys[v] - ys[u]) / (xs[v] - xs[u]) for u, v in zip(verts, verts[1:])]

    def cnum():
        return convexity_number_of_slopes(slopes(), pol.geom_tol)

    phase = 2
    while True:
        # hat-flattening loop for this phase
        trace.hat_steps_per_phase.setdefault(phase, 0)
        while True:
            hit = _find_hat_fast(g, fd, classes, xs, ys, verts, pol)
            if hit is None:
                break
            fa, j = hit
            c_before = cnum()
            u, mid, w = verts[j], verts[j + 1], verts[j + 2]
            corners = set(dict.fromkeys(q for (q, _v) in fd.walks[fa]))
            top = (corners - {u, mid, w}).pop()
            verts[j + 1] = top
            c_after = cnum()
            trace.events.append({"type": "hat_replaced", "face": fa,
                                 "c_before": c_before, "c_after": c_after})
            trace.hat_steps_per_phase[phase] += 1
            trace.total_steps += 1
            if c_after != c_before - 1:
                raise AssertionError(
                    f"hat replacement changed c from {c_before} to {c_after}")
            if trace.total_steps > max_steps:
                trace.status = "exhausted"
                trace.exhausted_reason = f"max_steps={max_steps} hit in hat loop"
                trace.path_vertices = tuple(verts)
                return trace

        # scan the faces above each path edge, left to right
        stop_edge = None
        sidedness: list[str] = []
        faces_above: list[int] = []
        for j in range(len(verts) - 1):
            u, v = verts[j], verts[j + 1]
            fa = _face_above(g, fd, xs, u, v)
            if fa == fd.outer_face_id or not classes[fa].is_rhombic:
                stop_edge = eidx[(min(u, v), max(u, v))]
                break
            faces_above.append(fa)
            v0, bottom, v3, e_left, e_right = _lower_hull(g, fd, xs, ys, fa, pol)
            this_id = eidx[(min(u, v), max(u, v))]
            if this_id == e_right:
                sidedness.append("rightsided")
            elif this_id == e_left:
                sidedness.append("leftsided")
            else:
                raise AmbiguousHull(
                    f"path edge {this_id} is not a lower-hull edge of face {fa}")

        if stop_edge is not None:
            trace.events.append({"type": "stopped_irregular",
                                 "edge": list(g.edges[stop_edge])})
            trace.status = "found_irregular"
            trace.found_edge = g.edges[stop_edge]
            trace.path_vertices = tuple(verts)
            l = len(verts) - 1
            if trace.total_steps > l * (l + 1) // 2 + l:
                raise AssertionError(
                    f"step count {trace.total_steps} exceeds the "
                    f"l(l+1)/2 + l budget for path length {l}")
            return trace

        if len(set(faces_above)) != len(faces_above):
            raise AssertionError("hat-free path has a repeated face above it")
        seen_left = False
        for s in sidedness:
            if s == "leftsided":
                seen_left = True
            elif seen_left:
                raise AssertionError(
                    f"sidedness sequence {sidedness} has rightsided after leftsided")

        c_before = cnum()
        old_len = len(verts) - 1
        if sidedness[0] == "rightsided":
            fa = faces_above[0]
            v0, bottom, v3, e_left, e_right = _lower_hull(g, fd, xs, ys, fa, pol)
            verts.insert(0, v0)
            trace.events.append({"type": "extended_left",
                                 "edge": list(g.edges[e_left])})
        else:
            fa = faces_above[-1]
            v0, bottom, v3, e_left, e_right = _lower_hull(g, fd, xs, ys, fa, pol)
            verts.append(v3)
            trace.events.append({"type": "extended_right",
                                 "edge": list(g.edges[e_right])})
        trace.total_steps += 1
        c_after = cnum()
        new_len = len(verts) - 1
        if new_len != old_len + 1:
            raise AssertionError("extension did not grow the path by one edge")
        if c_after - c_before > new_len - 1:
            raise AssertionError(
                f"extension raised c by {c_after - c_before} > {new_len - 1}")
        if trace.total_steps > max_steps:
            trace.status = "exhausted"
            trace.exhausted_reason = f"max_steps={max_steps} hit while extending"
            trace.path_vertices = tuple(verts)
            return trace
        phase += 1
