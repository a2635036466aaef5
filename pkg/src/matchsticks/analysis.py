"""Counting engine: face-profile identities, rhombus chains, and bound evaluators.

The identities tie the edge count to the face boundary profile of a
connected drawing; chains decompose the rhombic faces into maximal parallel
strips whose count C controls the quadrilateral face count. Closed-form
evaluators give the triangle-free edge bounds and the disk-packing bounds
(the latter kept in logarithmic form, since 3**(16 r^2) overflows doubles
for moderate r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import Disconnected, NonpositiveRadius
from .faces import FaceClass, FaceDecomposition, classify_faces, enumerate_faces
from .geometry import DEFAULT_TOL, Point, TolerancePolicy
from .graph import MatchstickGraph, is_connected


def boundary_excess(fd: FaceDecomposition) -> int:
    """Sum of (i - 4) over faces with boundary length i >= 5, outer face included."""
    return sum((i - 4) * cnt for i, cnt in fd.f.items() if i >= 5)


@dataclass(frozen=True)
class IdentityChecks:
    """Exact integer evaluations of the three counting identities."""

    incidence_ok: bool            # sum_i i*f_i == 2e
    euler_ok: bool                # n - e + #faces == 2
    excess_ok: bool | None        # e == 2n - 4 - F/2, None when not applicable
    excess_applicable: bool
    n: int
    e: int
    face_count: int
    F: int

    def all_pass(self) -> bool:
        return self.incidence_ok and self.euler_ok and self.excess_ok is not False

    def to_json_dict(self) -> dict:
        return {
            "incidence_double_count": self.incidence_ok,
            "euler_formula": self.euler_ok,
            "excess_identity": self.excess_ok,
            "excess_applicable": self.excess_applicable,
        }


def counting_identities(g: MatchstickGraph, fd: FaceDecomposition | None = None,
                        pol: TolerancePolicy = DEFAULT_TOL) -> IdentityChecks:
    """Evaluate the double-count, Euler, and excess identities exactly.

    The excess identity needs every face to have at least 4 boundary edges
    (no triangular face, and more than a single edge overall); otherwise it
    is reported as not applicable.
    """
    if not is_connected(g):
        raise Disconnected("identities are defined for connected graphs")
    if fd is None:
        fd = enumerate_faces(g, pol)
    incidence = sum(i * cnt for i, cnt in fd.f.items()) == 2 * g.e
    euler = g.n - g.e + fd.face_count == 2
    F = boundary_excess(fd)
    applicable = g.e > 0 and all(i >= 4 for i in fd.f)
    excess = (2 * g.e == 2 * (2 * g.n - 4) - F) if applicable else None
    return IdentityChecks(
        incidence_ok=incidence, euler_ok=euler,
        excess_ok=excess, excess_applicable=applicable,
        n=g.n, e=g.e, face_count=fd.face_count, F=F)


@dataclass(frozen=True)
class RhombusChain:
    """A maximal strip of rhombic faces sharing parallel unit rail edges.

    ``rail_edges`` lists k >= 2 edge ids whose vectors all equal
    ``direction``; ``rhombi`` lists the k - 1 face ids between consecutive
    rails. A chain and its reversal are the same object; the stored
    orientation is canonical (first rail id < last rail id).
    """

    direction: Point
    rail_edges: tuple[int, ...]
    rhombi: tuple[int, ...]


def _rhombic_face_ids(classes: dict[int, FaceClass]) -> list[int]:
    return sorted(fid for fid, fc in classes.items() if fc.is_rhombic)


def _opposite_edge(fd: FaceDecomposition, g: MatchstickGraph,
                   face_id: int, edge_id: int) -> int:
    ids = fd.face_edge_ids[face_id]
    walk = fd.walks[face_id]
    eidx = g.edge_index()
    ordered = [eidx[(min(u, v), max(u, v))] for (u, v) in walk]
    k = ordered.index(edge_id)
    return ordered[(k + 2) % 4]


def rhombus_chains(g: MatchstickGraph, fd: FaceDecomposition | None = None,
                   classes: dict[int, FaceClass] | None = None,
                   pol: TolerancePolicy = DEFAULT_TOL
                   ) -> tuple[list[RhombusChain], int]:
    """Extract all inequivalent maximal rhombus chains; returns (chains, C).

    Every rhombic face lies in exactly two chains (one per direction class of
    its sides); a rhombus not extendable in a direction yields a chain with
    two rails.
    """
    if fd is None:
        fd = enumerate_faces(g, pol)
    if classes is None:
        classes = classify_faces(g, fd, None, pol)
    eidx = g.edge_index()
    verts = g.vertices

    def other_face(edge_id: int, face_id: int) -> int | None:
        fs = fd.edge_faces[edge_id]
        if len(fs) == 1:
            return None
        return fs[0] if fs[1] == face_id else fs[1]

    def grow(face_id: int, rail: int) -> tuple[list[int], list[int]]:
        """Follow the chain from ``face_id`` outward across ``rail``."""
        rails = []
        faces = []
        cur_face = face_id
        cur_rail = rail
        while True:
            rails.append(cur_rail)
            nxt = other_face(cur_rail, cur_face)
            if nxt is None or not classes[nxt].is_rhombic:
                return rails, faces
            faces.append(nxt)
            cur_rail = _opposite_edge(fd, g, nxt, cur_rail)
            cur_face = nxt
            if len(rails) > g.e:
                raise RuntimeError("rhombus chain failed to terminate")

    seen: dict[frozenset[int], RhombusChain] = {}
    for fid in _rhombic_face_ids(classes):
        walk = fd.walks[fid]
        ordered = [eidx[(min(u, v), max(u, v))] for (u, v) in walk]
        for (eA, eB) in ((ordered[0], ordered[2]), (ordered[1], ordered[3])):
            left_rails, left_faces = grow(fid, eA)
            right_rails, right_faces = grow(fid, eB)
            rails = list(reversed(left_rails)) + right_rails
            rhombi = list(reversed(left_faces)) + [fid] + right_faces
            key = frozenset(rails)
            if key in seen:
                continue
            if rails[0] > rails[-1]:
                rails.reverse()
                rhombi.reverse()
            (i, j) = g.edges[rails[0]]
            vx = verts[j][0] - verts[i][0]
            vy = verts[j][1] - verts[i][1]
            if vx < -pol.geom_tol or (abs(vx) <= pol.geom_tol and vy < 0.0):
                vx, vy = -vx, -vy
            seen[key] = RhombusChain((vx, vy), tuple(rails), tuple(rhombi))

    chains = sorted(seen.values(), key=lambda c: c.rail_edges)
    return chains, len(chains)


def chain_overlap_check(chains: list[RhombusChain]
                        ) -> tuple[bool, list[tuple[int, int, list[int]]]]:
    """Pass iff every pair of distinct maximal chains shares at most one rhombus."""
    membership: dict[int, list[int]] = {}
    for ci, ch in enumerate(chains):
        for fid in ch.rhombi:
            membership.setdefault(fid, []).append(ci)
    pair_faces: dict[tuple[int, int], list[int]] = {}
    for fid, cs in membership.items():
        for a in range(len(cs)):
            for b in range(a + 1, len(cs)):
                pair_faces.setdefault((cs[a], cs[b]), []).append(fid)
    witnesses = [(i, j, sorted(fids)) for (i, j), fids in sorted(pair_faces.items())
                 if len(fids) > 1]
    return (not witnesses, witnesses)


@dataclass(frozen=True)
class ChainInequalities:
    """Evaluated sides of the chain-count inequalities."""

    rhombic_faces: int
    chain_pairs: int              # C choose 2
    pair_bound_ok: bool           # rhombic_faces <= C choose 2
    two_c: int
    high_face_sum: int            # sum of i*f_i over i >= 5
    five_f: int
    end_bound_left_ok: bool       # 2C <= high_face_sum
    end_bound_right_ok: bool      # high_face_sum <= 5F
    in_hypothesis: bool           # outer boundary length >= 5

    def to_json_dict(self) -> dict:
        return {
            "chain_pair_bound": [self.rhombic_faces, self.chain_pairs,
                                 self.pair_bound_ok],
            "chain_end_bound": [self.two_c, self.high_face_sum, self.five_f,
                                self.end_bound_left_ok, self.end_bound_right_ok],
            "in_hypothesis": self.in_hypothesis,
        }


def chain_inequalities(g: MatchstickGraph, fd: FaceDecomposition | None = None,
                       classes: dict[int, FaceClass] | None = None,
                       chains_c: tuple[list[RhombusChain], int] | None = None,
                       pol: TolerancePolicy = DEFAULT_TOL) -> ChainInequalities:
    """Evaluate the chain-count inequalities with f4 = genuine rhombic faces.

    When the outer face walk is shorter than 5 the left end-bound can fail
    for trivial reasons; ``in_hypothesis`` is False then and the result is
    out of hypothesis rather than a defect.
    """
    if fd is None:
        fd = enumerate_faces(g, pol)
    if classes is None:
        classes = classify_faces(g, fd, None, pol)
    if chains_c is None:
        chains_c = rhombus_chains(g, fd, classes, pol)
    chains, C = chains_c
    f4 = len(_rhombic_face_ids(classes))
    F = boundary_excess(fd)
    high = sum(i * cnt for i, cnt in fd.f.items() if i >= 5)
    return ChainInequalities(
        rhombic_faces=f4,
        chain_pairs=C * (C - 1) // 2,
        pair_bound_ok=f4 <= C * (C - 1) // 2,
        two_c=2 * C,
        high_face_sum=high,
        five_f=5 * F,
        end_bound_left_ok=2 * C <= high,
        end_bound_right_ok=high <= 5 * F,
        in_hypothesis=fd.boundary_length[fd.outer_face_id] >= 5,
    )


@dataclass(frozen=True)
class IrregularEdgeReport:
    """Irregular-edge census plus the arithmetic chain it feeds."""

    e_star: int
    irregular: tuple[bool, ...]   # per edge id
    capacity: int                 # 2e - 4 * rhombic_faces
    upper: float                  # 2n - e_star / 10

    def to_json_dict(self) -> dict:
        return {"e_star": self.e_star, "capacity": self.capacity,
                "upper": self.upper}


def irregular_edge_count(g: MatchstickGraph, fd: FaceDecomposition,
                         classes: dict[int, FaceClass]) -> IrregularEdgeReport:
    """Label each edge regular/irregular and evaluate the related arithmetic.

    An edge is irregular when at least one of its incident faces is not a
    rhombic face; e* counts irregular edges.
    """
    flags = []
    for k in range(g.e):
        fs = fd.edge_faces[k]
        flags.append(any(not classes[f].is_rhombic for f in fs))
    e_star = sum(flags)
    f4 = len(_rhombic_face_ids(classes))
    return IrregularEdgeReport(
        e_star=e_star,
        irregular=tuple(flags),
        capacity=2 * g.e - 4 * f4,
        upper=2.0 * g.n - e_star / 10.0,
    )


# ---------------------------------------------------------------------------
# Closed-form bound evaluators
# ---------------------------------------------------------------------------

def max_edges_upper_bound(n: int) -> float:
    """Upper bound 2n - (sqrt(2)/5) sqrt(n) for triangle-free edge counts."""
    return 2.0 * n - (math.sqrt(2.0) / 5.0) * math.sqrt(n)


def conjectured_max_edges(n: int) -> int:
    """floor(2n - sqrt(2n - 7/4) - 3/2), attained by the 2k-gon constructions."""
    return math.floor(2 * n - math.sqrt(2 * n - 1.75) - 1.5)


def construction_lower_bound(n: int) -> float:
    """2n - sqrt(2) sqrt(n); the additive O(1) term is omitted."""
    return 2.0 * n - math.sqrt(2.0) * math.sqrt(n)


def disk_edge_bounds(r: float, n: int) -> dict:
    """Edge-count bound data for n-vertex graphs in a disk of radius r.

    The upper-bound coefficient deficit eps2 = 1 / (20 * 3**(16 r^2)) is
    reported as log10(eps2) since the power overflows doubles for r beyond
    roughly 6.7; the additive term is 100 r^4 + 8 r^2.
    """
    if not (r > 0):
        raise NonpositiveRadius(f"radius must be positive, got {r}")
    log10_eps2 = -(math.log10(20.0) + 16.0 * r * r * math.log10(3.0))
    return {
        "lower_coeff": 2.0 - 5.0 / r,
        "upper_log10_eps2": log10_eps2,
        "upper_additive": 100.0 * r ** 4 + 8.0 * r * r,
        "n": n,
        "lower_value": (2.0 - 5.0 / r) * n,
    }


@dataclass
class AnalysisReport:
    """Everything the counting engine knows about one connected graph."""

    n: int
    e: int
    f: dict[int, int]
    rhombic_face_count: int
    F: int
    C: int
    e_star: int
    identity_checks: IdentityChecks
    inequality_checks: ChainInequalities
    irregular: IrregularEdgeReport
    bounds: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "e": self.e,
            "f": {str(k): v for k, v in sorted(self.f.items())},
            "rhombic_face_count": self.rhombic_face_count,
            "F": self.F,
            "C": self.C,
            "e_star": self.e_star,
            "identities": self.identity_checks.to_json_dict(),
            "inequalities": {
                **self.inequality_checks.to_json_dict(),
                "irregular_arithmetic": self.irregular.to_json_dict(),
            },
            "bounds": self.bounds,
        }


def analyze(g: MatchstickGraph, r: float | None = None,
            pol: TolerancePolicy = DEFAULT_TOL) -> AnalysisReport:
    """Full counting report for a connected validated graph."""
    if not is_connected(g):
        raise Disconnected("analysis requires a connected graph")
    fd = enumerate_faces(g, pol)
    classes = classify_faces(g, fd, r, pol)
    ident = counting_identities(g, fd, pol)
    chains, C = rhombus_chains(g, fd, classes, pol)
    ineq = chain_inequalities(g, fd, classes, (chains, C), pol)
    irreg = irregular_edge_count(g, fd, classes)
    bounds = {
        "max_edges_upper": max_edges_upper_bound(g.n),
        "conjectured_max": conjectured_max_edges(g.n),
        "construction_lower": construction_lower_bound(g.n),
    }
    if r is not None:
        bounds["disk"] = disk_edge_bounds(r, g.n)
    return AnalysisReport(
        n=g.n, e=g.e, f=dict(fd.f),
        rhombic_face_count=ineq.rhombic_faces,
        F=ident.F, C=C, e_star=irreg.e_star,
        identity_checks=ident, inequality_checks=ineq, irregular=irreg,
        bounds=bounds)
