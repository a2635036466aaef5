"""The validated matchstick-graph object, its checks, and file persistence.

A :class:`MatchstickGraph` is a straight-line drawing: vertex coordinates
plus an edge list over vertex indices. Validation covers unit edge lengths,
pairwise non-crossing, simplicity (including coincident vertices),
connectivity, triangle-freeness (no 3-cycle in the abstract graph), and
containment in a disk.
"""

from __future__ import annotations

import json
import math
from collections import Counter, deque
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import GraphFormatError, UnknownEdge
from .geometry import DEFAULT_TOL, Point, TolerancePolicy, is_finite_point

_REL_NAME = {2: "proper_cross", 3: "overlap", 4: "endpoint_on_interior"}

ALL_CHECKS = (
    "simple",
    "unit_lengths",
    "noncrossing",
    "connected",
    "triangle_free",
    "disk_contained",
)


@dataclass(frozen=True)
class DiskSpec:
    """A closed disk: center point and positive radius, in unit lengths."""

    center: Point = (0.0, 0.0)
    radius: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"disk radius must be finite and positive: {self.radius}")
        if not is_finite_point(self.center):
            raise ValueError(f"disk center must be finite: {self.center}")


class MatchstickGraph:
    """Immutable embedded graph: vertex coordinates plus index-pair edges.

    Structural invariants (index range, i < j, no duplicates, no self-loops)
    are enforced at construction; geometric ones are checked by
    :func:`validate`. Edges are stored sorted lexicographically, and edge ids
    are positions in that sorted list.
    """

    __slots__ = ("vertices", "edges", "disk", "_coords", "_adj", "_edge_index")

    def __init__(self, vertices, edges, disk: DiskSpec | None = None):
        verts = tuple((float(x), float(y)) for (x, y) in vertices)
        for p in verts:
            if not is_finite_point(p):
                raise ValueError(f"vertex coordinates must be finite: {p}")
        n = len(verts)
        norm = []
        for (i, j) in edges:
            i = int(i)
            j = int(j)
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if i > j:
                i, j = j, i
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for {n} vertices")
            norm.append((i, j))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        self.vertices: tuple[Point, ...] = verts
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self.disk = disk
        self._coords = None
        self._adj = None
        self._edge_index = None

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def e(self) -> int:
        return len(self.edges)

    def coords(self) -> np.ndarray:
        if self._coords is None:
            self._coords = np.array(self.vertices, dtype=np.float64).reshape(-1, 2)
        return self._coords

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        if self._adj is None:
            nbr: list[list[int]] = [[] for _ in range(self.n)]
            for (i, j) in self.edges:
                nbr[i].append(j)
                nbr[j].append(i)
            self._adj = tuple(tuple(sorted(a)) for a in nbr)
        return self._adj

    def edge_index(self) -> dict[tuple[int, int], int]:
        if self._edge_index is None:
            self._edge_index = {e: k for k, e in enumerate(self.edges)}
        return self._edge_index

    def edge_id(self, i: int, j: int) -> int:
        key = (i, j) if i < j else (j, i)
        idx = self.edge_index().get(key)
        if idx is None:
            raise UnknownEdge(f"no edge {key} in graph")
        return idx

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatchstickGraph)
                and self.vertices == other.vertices
                and self.edges == other.edges
                and self.disk == other.disk)

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges, self.disk))

    def __repr__(self) -> str:
        d = f", disk=r{self.disk.radius}" if self.disk else ""
        return f"MatchstickGraph(n={self.n}, e={self.e}{d})"


@dataclass
class ValidationReport:
    """Per-check pass/fail/skipped flags plus offending identifiers."""

    status: dict[str, str] = field(default_factory=dict)
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v != "fail" for v in self.status.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.status.items() if v == "fail"]

    def to_json_dict(self) -> dict:
        return {"status": dict(self.status),
                "violations": [list(v) for v in self.violations],
                "ok": self.ok}


def _components(g: MatchstickGraph) -> list[list[int]]:
    seen = [False] * g.n
    adj = g.adjacency()
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    dq.append(v)
        comps.append(sorted(comp))
    return comps


def connected_components(g: MatchstickGraph) -> list[list[int]]:
    """Vertex id lists of the connected components (isolated vertices included)."""
    return _components(g)


def subgraph(g: MatchstickGraph, vertex_ids) -> MatchstickGraph:
    """Induced subgraph on ``vertex_ids`` with indices remapped in given order."""
    ids = list(vertex_ids)
    remap = {old: new for new, old in enumerate(ids)}
    keep = set(ids)
    verts = [g.vertices[i] for i in ids]
    edges = [(remap[i], remap[j]) for (i, j) in g.edges if i in keep and j in keep]
    return MatchstickGraph(verts, edges, disk=g.disk)


def largest_component(g: MatchstickGraph) -> MatchstickGraph:
    """The induced subgraph on the largest connected component."""
    comps = _components(g)
    best = max(comps, key=lambda c: (len(c), -c[0]))
    return subgraph(g, best)


def is_connected(g: MatchstickGraph) -> bool:
    return len(_components(g)) == 1


def validate(g: MatchstickGraph, pol: TolerancePolicy = DEFAULT_TOL,
             checks=None, disk: DiskSpec | None = None) -> ValidationReport:
    """Run the requested constraint checks and report all problems found.

    ``checks`` defaults to every check; ``disk`` overrides the graph's own
    disk for the containment test. Nothing is raised: failures are listed in
    the report.
    """
    if checks is None:
        wanted = set(ALL_CHECKS)
    else:
        wanted = set(checks)
        unknown = wanted.difference(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
    rep = ValidationReport()
    pts = g.coords()
    xs = pts[:, 0]
    ys = pts[:, 1]

    if "simple" in wanted:
        bad = _kernels.distance_band_pairs(xs, ys, 0.0, pol.geom_tol) if g.n > 1 else []
        status = "fail" if bad else "pass"
        for (i, j) in bad[:50]:
            rep.violations.append(("simple", f"vertices {i} and {j} coincide"))
        rep.status["simple"] = status

    if "unit_lengths" in wanted:
        if g.e:
            ea = np.array(g.edges, dtype=np.intp)
            d = np.hypot(xs[ea[:, 1]] - xs[ea[:, 0]], ys[ea[:, 1]] - ys[ea[:, 0]])
            bad_ids = np.nonzero(np.abs(d - 1.0) > pol.unit_tol)[0]
        else:
            bad_ids = []
        rep.status["unit_lengths"] = "fail" if len(bad_ids) else "pass"
        for k in list(bad_ids)[:50]:
            rep.violations.append(
                ("unit_lengths", f"edge {int(k)} {g.edges[int(k)]} has length {d[int(k)]!r}"))

    if "noncrossing" in wanted:
        if g.e >= 2:
            ea = np.array(g.edges, dtype=np.intp)
            conflicts = _kernels.segment_conflicts(
                xs[ea[:, 0]], ys[ea[:, 0]], xs[ea[:, 1]], ys[ea[:, 1]], pol.geom_tol)
        else:
            conflicts = []
        rep.status["noncrossing"] = "fail" if conflicts else "pass"
        for (i, j, code) in conflicts[:50]:
            rep.violations.append(
                ("noncrossing",
                 f"edges {i} {g.edges[i]} and {j} {g.edges[j]}: {_REL_NAME[code]}"))

    if "connected" in wanted:
        connected = is_connected(g)
        rep.status["connected"] = "pass" if connected else "fail"
        if not connected:
            rep.violations.append(
                ("connected", f"{len(_components(g))} components"))

    if "triangle_free" in wanted:
        adj = [set(a) for a in g.adjacency()]
        tri = None
        for (i, j) in g.edges:
            common = adj[i] & adj[j]
            if common:
                tri = (i, j, min(common))
                break
        rep.status["triangle_free"] = "fail" if tri else "pass"
        if tri:
            rep.violations.append(("triangle_free", f"3-cycle {tri}"))

    if "disk_contained" in wanted:
        spec = disk if disk is not None else g.disk
        if spec is None:
            rep.status["disk_contained"] = "skipped"
        else:
            cx, cy = spec.center
            d = np.hypot(xs - cx, ys - cy)
            bad_ids = np.nonzero(d > spec.radius + pol.geom_tol)[0]
            rep.status["disk_contained"] = "fail" if len(bad_ids) else "pass"
            for k in list(bad_ids)[:50]:
                rep.violations.append(
                    ("disk_contained",
                     f"vertex {int(k)} at distance {float(d[int(k)])!r} > r={spec.radius}"))

    return rep


def degree_profile(g: MatchstickGraph) -> tuple[dict[int, int], bool]:
    """Degree histogram (degree -> count) and a connectivity flag."""
    degs = Counter()
    for a in g.adjacency():
        degs[len(a)] += 1
    return dict(sorted(degs.items())), is_connected(g)


def remove_edges(g: MatchstickGraph, which) -> MatchstickGraph:
    """Same vertices, edge set minus the given edge ids."""
    drop = set()
    for k in which:
        k = int(k)
        if not (0 <= k < g.e):
            raise UnknownEdge(f"edge id {k} out of range (e={g.e})")
        drop.add(k)
    edges = [e for k, e in enumerate(g.edges) if k not in drop]
    return MatchstickGraph(g.vertices, edges, disk=g.disk)


# ---------------------------------------------------------------------------
# Canonical graph file format (JSON-shaped text, bit-exact round trip)
# ---------------------------------------------------------------------------

def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def dumps_graph(g: MatchstickGraph) -> str:
    """Serialize to the canonical text form, 17 significant digits per coordinate."""
    parts = ['{"version":1,"disk":']
    if g.disk is None:
        parts.append("null")
    else:
        cx, cy = g.disk.center
        parts.append(f'{{"center":[{_fmt(cx)},{_fmt(cy)}],"radius":{_fmt(g.disk.radius)}}}')
    parts.append(',"vertices":[')
    parts.append(",".join(f"[{_fmt(x)},{_fmt(y)}]" for (x, y) in g.vertices))
    parts.append('],"edges":[')
    parts.append(",".join(f"[{i},{j}]" for (i, j) in g.edges))
    parts.append("]}")
    return "".join(parts)


def loads_graph(text: str) -> MatchstickGraph:
    """Parse the canonical graph format; unknown fields are rejected."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GraphFormatError("top-level value must be an object")
    extra = set(doc) - {"version", "disk", "vertices", "edges"}
    if extra:
        raise GraphFormatError(f"unknown fields: {sorted(extra)}")
    for key in ("version", "disk", "vertices", "edges"):
        if key not in doc:
            raise GraphFormatError(f"missing field: {key}")
    if doc["version"] != 1:
        raise GraphFormatError(f"unsupported version: {doc['version']!r}")
    disk = None
    if doc["disk"] is not None:
        dd = doc["disk"]
        if not isinstance(dd, dict) or set(dd) != {"center", "radius"}:
            raise GraphFormatError("disk must have exactly center and radius")
        center = dd["center"]
        if (not isinstance(center, list) or len(center) != 2
                or not all(isinstance(v, (int, float)) for v in center)):
            raise GraphFormatError("disk center must be [x, y]")
        disk = DiskSpec((float(center[0]), float(center[1])), float(dd["radius"]))
    verts = doc["vertices"]
    if not isinstance(verts, list):
        raise GraphFormatError("vertices must be a list")
    parsed_verts = []
    for v in verts:
        if (not isinstance(v, list) or len(v) != 2
                or not all(isinstance(c, (int, float)) for c in v)):
            raise GraphFormatError(f"bad vertex entry: {v!r}")
        if not (math.isfinite(v[0]) and math.isfinite(v[1])):
            raise GraphFormatError(f"non-finite vertex: {v!r}")
        parsed_verts.append((float(v[0]), float(v[1])))
    edges_doc = doc["edges"]
    if not isinstance(edges_doc, list):
        raise GraphFormatError("edges must be a list")
    parsed_edges = []
    for ent in edges_doc:
        if (not isinstance(ent, list) or len(ent) != 2
                or not all(isinstance(c, int) and not isinstance(c, bool) for c in ent)):
            raise GraphFormatError(f"bad edge entry: {ent!r}")
        i, j = ent
        if not (0 <= i < j < len(parsed_verts)):
            raise GraphFormatError(f"edge [{i},{j}] violates 0 <= i < j < n")
        parsed_edges.append((i, j))
    for a, b in zip(parsed_edges, parsed_edges[1:]):
        if a >= b:
            raise GraphFormatError("edges must be sorted lexicographically without duplicates")
    return MatchstickGraph(parsed_verts, parsed_edges, disk=disk)


def save_graph(g: MatchstickGraph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps_graph(g))


def load_graph(path) -> MatchstickGraph:
    with open(path, "r", encoding="ascii") as fh:
        return loads_graph(fh.read())
