"""Planar face structure induced by the drawing.

Faces come from the standard rotation-system walk: from directed edge
(u -> v) the walk continues with the edge after (v -> u) in clockwise order
at v, which makes bounded faces counterclockwise and the single outer walk
clockwise. A bridge contributes two directed edges to the same walk, so a
boundary edge is counted twice when the same face lies on both sides.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .errors import AmbiguousAngles, Disconnected
from .geometry import DEFAULT_TOL, TolerancePolicy, direction_angle, interior_angle
from .graph import MatchstickGraph, is_connected


class FaceKind(Enum):
    TRIANGLE = "triangle"
    RHOMBUS = "rhombus"
    FAT_RHOMBUS = "fat_rhombus"
    OTHER = "other"
    OUTER = "outer"


@dataclass(frozen=True)
class FaceClass:
    kind: FaceKind
    small_angle: float | None = None

    @property
    def is_rhombic(self) -> bool:
        return self.kind in (FaceKind.RHOMBUS, FaceKind.FAT_RHOMBUS)


@dataclass(frozen=True)
class FaceDecomposition:
    """Face walks plus the derived bookkeeping used everywhere downstream.

    ``walks[f]`` is the cyclic sequence of directed edges (u, v) of face f;
    every directed edge of the graph occurs in exactly one walk. ``f`` maps
    boundary length to face count, outer face included.
    """

    walks: tuple[tuple[tuple[int, int], ...], ...]
    outer_face_id: int
    boundary_length: tuple[int, ...]
    f: dict[int, int]
    dedge_face: dict[tuple[int, int], int]
    face_edge_ids: tuple[tuple[int, ...], ...]
    edge_faces: tuple[tuple[int, ...], ...]

    @property
    def face_count(self) -> int:
        return len(self.walks)

    def face_vertices(self, face_id: int) -> tuple[int, ...]:
        return tuple(u for (u, _v) in self.walks[face_id])


def rotation_system(g: MatchstickGraph,
                    pol: TolerancePolicy = DEFAULT_TOL) -> tuple[tuple[int, ...], ...]:
    """Per-vertex neighbors sorted counterclockwise by edge direction."""
    verts = g.vertices
    order: list[tuple[int, ...]] = []
    for v, nbrs in enumerate(g.adjacency()):
        if not nbrs:
            order.append(())
            continue
        angled = sorted(
            (direction_angle(verts[v], verts[u], pol), u) for u in nbrs
        )
        for (a1, u1), (a2, u2) in zip(angled, angled[1:]):
            if a2 - a1 <= pol.geom_tol:
                raise AmbiguousAngles(
                    f"edges {v}-{u1} and {v}-{u2} share direction at vertex {v}")
        if len(angled) > 1:
            wrap = angled[0][0] + 2.0 * math.pi - angled[-1][0]
            if wrap <= pol.geom_tol:
                raise AmbiguousAngles(
                    f"edges {v}-{angled[-1][1]} and {v}-{angled[0][1]} "
                    f"share direction at vertex {v}")
        order.append(tuple(u for (_a, u) in angled))
    return tuple(order)


def _walk_area(walk, verts) -> float:
    s = 0.0
    for (u, v) in walk:
        pu = verts[u]
        pv = verts[v]
        s += pu[0] * pv[1] - pv[0] * pu[1]
    return 0.5 * s


def enumerate_faces(g: MatchstickGraph,
                    pol: TolerancePolicy = DEFAULT_TOL) -> FaceDecomposition:
    """Trace all face walks of a connected validated drawing."""
    if not is_connected(g):
        raise Disconnected("face enumeration requires a connected graph")
    if g.e == 0:
        # one vertex, one face: the whole plane
        return FaceDecomposition(
            walks=((),), outer_face_id=0, boundary_length=(0,), f={0: 1},
            dedge_face={}, face_edge_ids=((),), edge_faces=())

    rot = rotation_system(g, pol)
    pos = [{u: k for k, u in enumerate(nbrs)} for nbrs in rot]

    def next_dedge(u: int, v: int) -> tuple[int, int]:
        nbrs = rot[v]
        k = pos[v][u]
        return (v, nbrs[(k - 1) % len(nbrs)])

    walks: list[tuple[tuple[int, int], ...]] = []
    dedge_face: dict[tuple[int, int], int] = {}
    for (i, j) in g.edges:
        for start in ((i, j), (j, i)):
            if start in dedge_face:
                continue
            face_id = len(walks)
            walk = []
            cur = start
            while True:
                dedge_face[cur] = face_id
                walk.append(cur)
                cur = next_dedge(*cur)
                if cur == start:
                    break
            walks.append(tuple(walk))

    verts = g.vertices
    areas = [_walk_area(w, verts) for w in walks]
    outer = min(range(len(walks)), key=lambda k: areas[k])
    if len(walks) > 1:
        others = sorted(a for k, a in enumerate(areas) if k != outer)
        if areas[outer] > -1e-12 or others[0] <= 1e-12:
            raise RuntimeError(
                "could not identify a unique outer face from signed areas")

    eidx = g.edge_index()
    face_edge_ids = []
    for w in walks:
        ids = sorted({eidx[(min(u, v), max(u, v))] for (u, v) in w})
        face_edge_ids.append(tuple(ids))
    edge_faces: list[set[int]] = [set() for _ in range(g.e)]
    for fid, ids in enumerate(face_edge_ids):
        for k in ids:
            edge_faces[k].add(fid)

    lengths = tuple(len(w) for w in walks)
    return FaceDecomposition(
        walks=tuple(walks),
        outer_face_id=outer,
        boundary_length=lengths,
        f=dict(sorted(Counter(lengths).items())),
        dedge_face=dedge_face,
        face_edge_ids=tuple(face_edge_ids),
        edge_faces=tuple(tuple(sorted(s)) for s in edge_faces),
    )


def fat_threshold(r: float) -> float:
    """Small-angle threshold above which a rhombic face counts as fat."""
    return math.pi / (50.0 * r * r)


def classify_faces(g: MatchstickGraph, fd: FaceDecomposition,
                   r: float | None = None,
                   pol: TolerancePolicy = DEFAULT_TOL) -> dict[int, FaceClass]:
    """Classify every face as triangle / rhombus / fat rhombus / other / outer.

    Rhombus recognition requires a bounded 4-walk with 4 distinct edges and
    4 distinct vertices; unit side lengths then make it a genuine rhombus.
    Without a radius the fat label is never assigned.
    """
    out: dict[int, FaceClass] = {}
    thresh = fat_threshold(r) if r is not None else None
    for fid, walk in enumerate(fd.walks):
        if fid == fd.outer_face_id:
            out[fid] = FaceClass(FaceKind.OUTER)
            continue
        length = len(walk)
        if length == 3:
            vs = [u for (u, _v) in walk]
            if len(set(vs)) == 3 and len(fd.face_edge_ids[fid]) == 3:
                out[fid] = FaceClass(FaceKind.TRIANGLE)
                continue
        if length == 4:
            vs = [u for (u, _v) in walk]
            if len(set(vs)) == 4 and len(fd.face_edge_ids[fid]) == 4:
                pts = [g.vertices[u] for u in vs]
                theta = interior_angle(pts[0], pts[1], pts[2])
                small = min(theta, math.pi - theta)
                if thresh is not None and small >= thresh:
                    out[fid] = FaceClass(FaceKind.FAT_RHOMBUS, small)
                else:
                    out[fid] = FaceClass(FaceKind.RHOMBUS, small)
                continue
        out[fid] = FaceClass(FaceKind.OTHER)
    return out
