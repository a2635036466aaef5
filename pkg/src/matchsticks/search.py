"""Desk-scale extremal search over restricted families of candidate graphs.

Results are certified lower bounds for the maximum edge count of
triangle-free matchstick graphs, never upper bounds: each family realizes
concrete drawings (lattice-window subsets, rhombic-tiling flips, boundary
augmentation variants) and reports the best one found. The probe table
compares best-known values against the conjectured closed form and the
proven upper bound.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from . import _kernels
from .errors import BudgetExceeded
from .generators import gen_triangle_free, gen_zonotope
from .geometry import DEFAULT_TOL, TolerancePolicy
from .graph import MatchstickGraph, validate
from .analysis import conjectured_max_edges, max_edges_upper_bound

FAMILY_NAMES = ("lattice_window", "zonotope_flips", "augmentation_variants")

DEFAULT_BUDGET = 3_000_000


@dataclass(frozen=True)
class CandidateFamily:
    """A named family of candidate vertex sets with its parameters."""

    name: str
    window: int | None = None       # lattice_window: side length
    k: int | None = None            # zonotope_flips: direction count
    flip_budget: int | None = None  # zonotope_flips: tilings to visit

    def __post_init__(self) -> None:
        if self.name not in FAMILY_NAMES:
            raise ValueError(f"unknown family {self.name!r}")


@dataclass(frozen=True)
class SearchResult:
    """Best graph found in a family; exhaustive only if fully enumerated."""

    n: int
    best_e: int
    witness: MatchstickGraph
    exhaustive: bool

    def to_json_dict(self) -> dict:
        from .graph import dumps_graph
        import json
        return {"n": self.n, "best_e": self.best_e,
                "exhaustive": self.exhaustive,
                "witness": json.loads(dumps_graph(self.witness))}


def _check_witness(res: SearchResult, pol: TolerancePolicy) -> SearchResult:
    g = res.witness
    if g.n != res.n or g.e != res.best_e:
        raise AssertionError("witness does not match reported counts")
    rep = validate(g, pol, checks={"simple", "unit_lengths", "noncrossing",
                                   "triangle_free"})
    if not rep.ok:
        raise AssertionError(f"witness failed validation: {rep.failed()}")
    if res.best_e > max_edges_upper_bound(res.n):
        raise AssertionError(
            f"family produced e={res.best_e} above the proven upper bound "
            f"for n={res.n}; no valid triangle-free drawing can do that")
    return res


def _window_graph(mask: int, w: int) -> MatchstickGraph:
    cells = [k for k in range(w * w) if (mask >> k) & 1]
    verts = [(float(k % w), float(k // w)) for k in cells]
    pos = {cells[k]: k for k in range(len(cells))}
    edges = []
    for cell in cells:
        if cell % w != w - 1 and cell + 1 in pos:
            edges.append((pos[cell], pos[cell + 1]))
        if cell + w in pos:
            edges.append((pos[cell], pos[cell + w]))
    return MatchstickGraph(verts, edges)


def _lattice_window_search(window: int, n: int, budget: int,
                           pol: TolerancePolicy) -> SearchResult:
    if n > window * window:
        raise ValueError(f"window {window}x{window} cannot host n={n} points")
    best_e, best_mask, _examined, complete = _kernels.window_best(
        window, window, n, budget)
    res = _check_witness(SearchResult(
        n=n, best_e=best_e, witness=_window_graph(best_mask, window),
        exhaustive=complete), pol)
    if not complete:
        raise BudgetExceeded(
            f"lattice_window {window}x{window} n={n} exceeded budget {budget}",
            result=res)
    return res


def _tiling_key(g: MatchstickGraph) -> frozenset:
    pts = {i: (round(x, 9), round(y, 9)) for i, (x, y) in enumerate(g.vertices)}
    return frozenset((min(pts[i], pts[j]), max(pts[i], pts[j])) for (i, j) in g.edges)


def _flip_neighbors(g: MatchstickGraph, pol: TolerancePolicy) -> list[MatchstickGraph]:
    """All tilings one hexagon flip away: move a degree-3 interior vertex."""
    from .faces import classify_faces, enumerate_faces

    fd = enumerate_faces(g, pol)
    classes = classify_faces(g, fd, None, pol)
    adj = g.adjacency()
    out = []
    for v in range(g.n):
        if len(adj[v]) != 3:
            continue
        faces = {fid for eid, (a, b) in enumerate(g.edges) if v in (a, b)
                 for fid in fd.edge_faces[eid]}
        if fd.outer_face_id in faces:
            continue
        faces = sorted(faces)
        if len(faces) != 3 or not all(classes[f].is_rhombic for f in faces):
            continue
        nbrs = adj[v]
        px, py = g.vertices[v]
        sx = sum(g.vertices[u][0] for u in nbrs)
        sy = sum(g.vertices[u][1] for u in nbrs)
        new_pos = (sx - 2.0 * px, sy - 2.0 * py)
        hex_corners = set()
        for f in faces:
            hex_corners.update(u for (u, _w) in fd.walks[f])
        hex_corners.discard(v)
        new_nbrs = sorted(hex_corners - set(nbrs))
        if len(new_nbrs) != 3:
            continue
        verts = list(g.vertices)
        verts[v] = new_pos
        edges = [e for e in g.edges if v not in e]
        edges += [(min(v, u), max(v, u)) for u in new_nbrs]
        cand = MatchstickGraph(verts, edges, disk=g.disk)
        rep = validate(cand, pol, checks={"simple", "unit_lengths",
                                          "noncrossing", "triangle_free"})
        if rep.ok:
            out.append(cand)
    return out


def enumerate_zonotope_tilings(k: int, limit: int,
                               pol: TolerancePolicy = DEFAULT_TOL
                               ) -> tuple[list[MatchstickGraph], bool]:
    """BFS over hexagon flips from the staircase tiling of the 2k-gon.

    Returns (tilings, complete); complete is False when ``limit`` stopped
    the traversal early.
    """
    start = gen_zonotope(k, pol)
    seen = {_tiling_key(start)}
    order = [start]
    queue = deque([start])
    while queue and len(order) < limit:
        cur = queue.popleft()
        for nxt in _flip_neighbors(cur, pol):
            key = _tiling_key(nxt)
            if key not in seen:
                seen.add(key)
                order.append(nxt)
                queue.append(nxt)
    complete = not queue
    return order, complete


def _zonotope_flip_search(k: int, n: int, budget: int,
                          pol: TolerancePolicy) -> SearchResult:
    n0 = (k + 1) * k // 2 + 1
    if n != n0:
        raise ValueError(f"zonotope_flips needs n = C(k+1,2)+1 = {n0}, got {n}")
    tilings, complete = enumerate_zonotope_tilings(k, budget, pol)
    best = max(tilings, key=lambda t: t.e)
    witness = tilings[0] if tilings[0].e == best.e else best
    res = _check_witness(SearchResult(
        n=n, best_e=best.e, witness=witness, exhaustive=complete), pol)
    if not complete:
        raise BudgetExceeded(
            f"zonotope_flips k={k} exceeded budget {budget}", result=res)
    return res


def _augmentation_search(n: int, budget: int, pol: TolerancePolicy) -> SearchResult:
    """Boundary-arc augmentation variants: rotate which arc gets copied."""
    from .generators import _zonotope_layout

    base = gen_triangle_free(n, pol)
    k = 1
    while (k + 2) * (k + 1) // 2 + 1 <= n:
        k += 1
    n0 = (k + 1) * k // 2 + 1
    q = n - n0
    results = [base]
    if q > 0 and k >= 2:
        verts0, edges0, boundary = _zonotope_layout(k)
        nb = len(boundary)
        for off in range(1, min(nb, budget)):
            verts = list(verts0)
            edges = list(edges0)
            arc = [boundary[(off + t) % nb] for t in range(q)]
            # outward bisector for the rotated arc: each boundary step of the
            # regular 2k-gon turns by pi/k
            ang = -math.pi / k + off * math.pi / k
            w = (math.cos(ang), math.sin(ang))
            new_ids = []
            for t, b in enumerate(arc):
                bx, by = verts[b]
                verts.append((bx + w[0], by + w[1]))
                nid = len(verts) - 1
                new_ids.append(nid)
                edges.append((b, nid))
                if t > 0:
                    edges.append((new_ids[t - 1], nid))
            try:
                cand = MatchstickGraph(verts, edges)
            except ValueError:
                continue
            rep = validate(cand, pol, checks={"simple", "unit_lengths",
                                              "noncrossing", "triangle_free"})
            if rep.ok and cand.n == n:
                results.append(cand)
    best = max(results, key=lambda t: t.e)
    witness = results[0] if results[0].e == best.e else best
    return _check_witness(SearchResult(
        n=n, best_e=best.e, witness=witness, exhaustive=True), pol)


def max_edges_over_family(fam: CandidateFamily, n: int,
                          budget: int = DEFAULT_BUDGET,
                          pol: TolerancePolicy = DEFAULT_TOL) -> SearchResult:
    """Best triangle-free n-vertex graph found within one family.

    Raises :class:`BudgetExceeded` (carrying the best-so-far result) when the
    family could not be fully enumerated within ``budget``.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if fam.name == "lattice_window":
        return _lattice_window_search(fam.window or 5, n, budget, pol)
    if fam.name == "zonotope_flips":
        k = fam.k
        if k is None:
            k = 1
            while (k + 2) * (k + 1) // 2 + 1 <= n:
                k += 1
        return _zonotope_flip_search(k, n, fam.flip_budget or budget, pol)
    return _augmentation_search(n, budget, pol)


@dataclass(frozen=True)
class ProbeRow:
    n: int
    best_known: int
    conjecture: int
    upper_bound: float
    sources: dict
    flags: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "best_known": self.best_known,
                "conjecture": self.conjecture, "upper_bound": self.upper_bound,
                "sources": self.sources, "flags": list(self.flags)}


def conjecture_probe(n_max: int, budget: int = DEFAULT_BUDGET,
                     pol: TolerancePolicy = DEFAULT_TOL) -> list[ProbeRow]:
    """Best-known edge counts over all families plus the direct construction.

    Flags ``below_conjecture`` (a generator bug) and ``exceeds_conjecture``
    (a finding: the conjectured formula would be wrong).
    """
    rows = []
    for n in range(1, n_max + 1):
        sources: dict[str, object] = {}
        best = gen_triangle_free(n, pol).e
        sources["generator"] = best

        window = None
        for w in (5, 4, 3, 2, 1):
            if n <= w * w and math.comb(w * w, n) <= budget:
                window = w
                break
        if window is not None:
            try:
                res = max_edges_over_family(
                    CandidateFamily("lattice_window", window=window), n, budget, pol)
                sources["lattice_window"] = {"window": window, "best_e": res.best_e,
                                             "exhaustive": res.exhaustive}
                best = max(best, res.best_e)
            except BudgetExceeded as exc:
                res = exc.result
                sources["lattice_window"] = {"window": window, "best_e": res.best_e,
                                             "exhaustive": False}
                best = max(best, res.best_e)

        k = 2
        while (k + 1) * k // 2 + 1 < n:
            k += 1
        if (k + 1) * k // 2 + 1 == n and k <= 5:
            res = max_edges_over_family(
                CandidateFamily("zonotope_flips", k=k, flip_budget=20000),
                n, budget, pol)
            sources["zonotope_flips"] = {"k": k, "best_e": res.best_e,
                                         "tilings_exhaustive": res.exhaustive}
            best = max(best, res.best_e)

        if n >= 3:
            res = max_edges_over_family(
                CandidateFamily("augmentation_variants"), n, budget, pol)
            sources["augmentation_variants"] = {"best_e": res.best_e}
            best = max(best, res.best_e)

        conj = conjectured_max_edges(n)
        upper = max_edges_upper_bound(n)
        flags = []
        if best < conj:
            flags.append("below_conjecture")
        if best > conj:
            flags.append("exceeds_conjecture")
        if best > upper:
            raise AssertionError(
                f"probe found e={best} > proven upper bound at n={n}")
        rows.append(ProbeRow(n=n, best_known=best, conjecture=conj,
                             upper_bound=upper, sources=sources,
                             flags=tuple(flags)))
    return rows
