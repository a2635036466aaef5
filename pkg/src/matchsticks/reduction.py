"""Preprocessing pipeline: strip triangular faces, then fat rhombic faces.

Each phase iterates to a fixpoint, removing the lexicographically smallest
offending edge (by sorted endpoint pair) of the currently smallest offending
face, so traces are reproducible. Counts are measured on the graph at the
start of each phase; removals are bounded by those counts since a removal
never creates a new face of the kind being stripped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MissingRadius
from .faces import FaceKind, classify_faces, enumerate_faces
from .geometry import DEFAULT_TOL, TolerancePolicy
from .graph import MatchstickGraph, remove_edges


@dataclass(frozen=True)
class ReductionTrace:
    """Record of the two stripping phases."""

    input_graph: MatchstickGraph
    after_triangles: MatchstickGraph
    after_fat_rhombi: MatchstickGraph
    removed_for_triangles: tuple[tuple[int, int], ...]
    removed_for_fat: tuple[tuple[int, int], ...]
    triangle_face_count: int
    fat_rhombus_count: int
    r: float

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "e_input": self.input_graph.e,
            "e_after_triangles": self.after_triangles.e,
            "e_output": self.after_fat_rhombi.e,
            "triangle_faces": self.triangle_face_count,
            "fat_rhombi": self.fat_rhombus_count,
            "removed_for_triangles": [list(e) for e in self.removed_for_triangles],
            "removed_for_fat": [list(e) for e in self.removed_for_fat],
        }


def _strip(g: MatchstickGraph, offending, pol: TolerancePolicy
           ) -> tuple[MatchstickGraph, list[tuple[int, int]], int]:
    """Remove the smallest edge of the smallest offending face until none remain.

    ``offending`` maps a (graph, decomposition, classes) triple to the list
    of face ids that must disappear. Returns the reduced graph, the removed
    edges as vertex pairs, and the offending-face count of the input graph.
    """
    removed: list[tuple[int, int]] = []
    initial_count: int | None = None
    cur = g
    while True:
        fd = enumerate_faces(cur, pol)
        classes = offending(cur, fd)
        bad = [fid for fid, hit in classes if hit]
        if initial_count is None:
            initial_count = len(bad)
        if not bad:
            return cur, removed, initial_count
        candidates = []
        for fid in bad:
            edge_ids = fd.face_edge_ids[fid]
            candidates.append(min(cur.edges[k] for k in edge_ids))
        target = min(candidates)
        removed.append(target)
        cur = remove_edges(cur, [cur.edge_index()[target]])


def strip_triangles(g: MatchstickGraph, r: float | None = None,
                    pol: TolerancePolicy = DEFAULT_TOL
                    ) -> tuple[MatchstickGraph, list[tuple[int, int]], int]:
    """Remove one edge per triangular face until no triangular face remains.

    Returns (stripped graph, removed edges as vertex pairs, initial
    triangular-face count). With a radius given, the initial count is
    checked against the area cap 8 r^2.
    """
    def offending(cur, fd):
        classes = classify_faces(cur, fd, None, pol)
        return [(fid, fc.kind is FaceKind.TRIANGLE) for fid, fc in classes.items()]

    out, removed, count = _strip(g, offending, pol)
    if r is not None and not count < 8.0 * r * r:
        raise AssertionError(
            f"triangular face count {count} reaches the area cap 8r^2={8 * r * r}")
    return out, removed, count


def strip_fat_rhombi(g: MatchstickGraph, r: float,
                     pol: TolerancePolicy = DEFAULT_TOL
                     ) -> tuple[MatchstickGraph, list[tuple[int, int]], int]:
    """Remove one edge per fat rhombic face (small angle >= pi / (50 r^2)).

    The input must already be free of triangular faces. Returns the stripped
    graph, removed edges, and the initial fat-rhombus count, checked against
    the area cap 100 r^4.
    """
    if r is None:
        raise MissingRadius("fat-rhombus stripping needs a disk radius")
    first = enumerate_faces(g, pol)
    first_classes = classify_faces(g, first, r, pol)
    if any(fc.kind is FaceKind.TRIANGLE for fc in first_classes.values()):
        raise ValueError("strip_fat_rhombi expects a graph with no triangular face")

    def offending(cur, fd):
        classes = classify_faces(cur, fd, r, pol)
        return [(fid, fc.kind is FaceKind.FAT_RHOMBUS) for fid, fc in classes.items()]

    out, removed, count = _strip(g, offending, pol)
    if not count <= 100.0 * r ** 4:
        raise AssertionError(
            f"fat rhombus count {count} exceeds the area cap 100r^4={100 * r ** 4}")
    return out, removed, count


def reduce_graph(g: MatchstickGraph, r: float,
                 pol: TolerancePolicy = DEFAULT_TOL) -> ReductionTrace:
    """Run both stripping phases and record the full trace.

    Asserts the edge-count budget e(input) <= e(output) + 100 r^4 + 8 r^2.
    """
    g1, removed_tri, tri_count = strip_triangles(g, r, pol)
    g2, removed_fat, fat_count = strip_fat_rhombi(g1, r, pol)
    budget = 100.0 * r ** 4 + 8.0 * r * r
    if not g.e <= g2.e + budget:
        raise AssertionError(
            f"edge budget violated: {g.e} > {g2.e} + {budget}")
    return ReductionTrace(
        input_graph=g, after_triangles=g1, after_fat_rhombi=g2,
        removed_for_triangles=tuple(removed_tri),
        removed_for_fat=tuple(removed_fat),
        triangle_face_count=tri_count,
        fat_rhombus_count=fat_count,
        r=float(r))


def reduced_ok(g: MatchstickGraph, r: float,
               pol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True iff the graph has no triangular and no fat rhombic face."""
    fd = enumerate_faces(g, pol)
    classes = classify_faces(g, fd, r, pol)
    return not any(fc.kind in (FaceKind.TRIANGLE, FaceKind.FAT_RHOMBUS)
                   for fc in classes.values())
