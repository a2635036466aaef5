"""Planar primitives and tolerance-aware predicates.

Every module in the package resolves unit-length and coincidence questions
through the same explicit :class:`TolerancePolicy`, so validation, face
enumeration, and path machinery all agree on what "unit" and "coincident"
mean. The segment classifier is written entirely with squared distances and
cross products (no square roots), which lets the compiled kernel mirror it
bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateSegment, NotARhombus

Point = tuple[float, float]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class TolerancePolicy:
    """Numeric slack for geometric decisions.

    ``unit_tol`` bounds how far an edge length may deviate from 1.
    ``geom_tol`` is the threshold for coincidence, collinearity, and
    angle-tie decisions. A unit edge must be unambiguous, hence the
    ordering geom_tol < unit_tol < 0.1.
    """

    unit_tol: float = 1e-9
    geom_tol: float = 1e-12

    def __post_init__(self) -> None:
        if not (0.0 <= self.unit_tol < 0.1):
            raise ValueError(f"unit_tol must be in [0, 0.1), got {self.unit_tol}")
        if not (0.0 <= self.geom_tol < self.unit_tol):
            raise ValueError(
                f"geom_tol must be in [0, unit_tol), got {self.geom_tol}"
            )


DEFAULT_TOL = TolerancePolicy()


class SegmentRelation(Enum):
    DISJOINT = "disjoint"
    SHARED_ENDPOINT = "shared_endpoint"
    PROPER_CROSS = "proper_cross"
    OVERLAP = "overlap"
    ENDPOINT_ON_INTERIOR = "endpoint_on_interior"


# Integer codes shared with the kernels; order matters.
REL_DISJOINT = 0
REL_SHARED_ENDPOINT = 1
REL_PROPER_CROSS = 2
REL_OVERLAP = 3
REL_ENDPOINT_ON_INTERIOR = 4

_REL_BY_CODE = (
    SegmentRelation.DISJOINT,
    SegmentRelation.SHARED_ENDPOINT,
    SegmentRelation.PROPER_CROSS,
    SegmentRelation.OVERLAP,
    SegmentRelation.ENDPOINT_ON_INTERIOR,
)


def is_finite_point(p: Point) -> bool:
    return math.isfinite(p[0]) and math.isfinite(p[1])


def dist(p: Point, q: Point) -> float:
    return math.hypot(q[0] - p[0], q[1] - p[1])


def unit_distance(p: Point, q: Point, pol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True iff the distance between p and q deviates from 1 by at most unit_tol."""
    return abs(dist(p, q) - 1.0) <= pol.unit_tol


def direction_angle(p: Point, q: Point, pol: TolerancePolicy = DEFAULT_TOL) -> float:
    """Angle of q - p in [0, 2*pi), counterclockwise from the positive x-axis."""
    dx = q[0] - p[0]
    dy = q[1] - p[1]
    if dx * dx + dy * dy <= pol.geom_tol * pol.geom_tol:
        raise DegenerateSegment(f"zero-length direction from {p} to {q}")
    a = math.atan2(dy, dx)
    return a + TWO_PI if a < 0.0 else a


def _point_segment_dist2(px: float, py: float, ax: float, ay: float,
                         bx: float, by: float) -> float:
    """Squared distance from point (px,py) to segment (a,b)."""
    dx = bx - ax
    dy = by - ay
    l2 = dx * dx + dy * dy
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


def classify_segments(x1: float, y1: float, x2: float, y2: float,
                      x3: float, y3: float, x4: float, y4: float,
                      tol: float) -> int:
    """Classify the pair of segments (p1,p2) and (p3,p4); returns a REL_* code.

    Reference implementation mirrored by the compiled kernel. Uses only
    squared distances and cross products so both versions agree exactly.
    """
    t2 = tol * tol

    dx_a = x1 - x3
    dy_a = y1 - y3
    c11 = dx_a * dx_a + dy_a * dy_a <= t2
    dx_a = x1 - x4
    dy_a = y1 - y4
    c12 = dx_a * dx_a + dy_a * dy_a <= t2
    dx_a = x2 - x3
    dy_a = y2 - y3
    c21 = dx_a * dx_a + dy_a * dy_a <= t2
    dx_a = x2 - x4
    dy_a = y2 - y4
    c22 = dx_a * dx_a + dy_a * dy_a <= t2

    ncoinc = int(c11) + int(c12) + int(c21) + int(c22)
    if ncoinc >= 2:
        return REL_OVERLAP
    if ncoinc == 1:
        # other endpoint of segment A / of segment B
        if c11:
            oax, oay, obx, oby = x2, y2, x4, y4
        elif c12:
            oax, oay, obx, oby = x2, y2, x3, y3
        elif c21:
            oax, oay, obx, oby = x1, y1, x4, y4
        else:
            oax, oay, obx, oby = x1, y1, x3, y3
        if (_point_segment_dist2(oax, oay, x3, y3, x4, y4) <= t2
                or _point_segment_dist2(obx, oby, x1, y1, x2, y2) <= t2):
            return REL_OVERLAP
        return REL_SHARED_ENDPOINT

    ax = x2 - x1
    ay = y2 - y1
    bx = x4 - x3
    by = y4 - y3
    la2 = ax * ax + ay * ay
    lb2 = bx * bx + by * by
    # cross > tol * len  <=>  cross > 0 and cross^2 > tol^2 * len^2
    ta2 = t2 * la2
    tb2 = t2 * lb2
    d1 = ax * (y3 - y1) - ay * (x3 - x1)
    d2 = ax * (y4 - y1) - ay * (x4 - x1)
    d3 = bx * (y1 - y3) - by * (x1 - x3)
    d4 = bx * (y2 - y3) - by * (x2 - x3)

    if d1 * d1 <= ta2 and d2 * d2 <= ta2:
        # collinear within tolerance: compare extents along A's direction
        # (checked before endpoint-on-interior so collinear overlaps are
        # reported as overlap)
        s1 = ((x3 - x1) * ax + (y3 - y1) * ay) / la2
        s2 = ((x4 - x1) * ax + (y4 - y1) * ay) / la2
        if s1 > s2:
            s1, s2 = s2, s1
        lo = s1 if s1 > 0.0 else 0.0
        hi = s2 if s2 < 1.0 else 1.0
        if hi > lo and (hi - lo) * (hi - lo) * la2 > t2:
            return REL_OVERLAP
        return REL_DISJOINT

    if (_point_segment_dist2(x1, y1, x3, y3, x4, y4) <= t2
            or _point_segment_dist2(x2, y2, x3, y3, x4, y4) <= t2
            or _point_segment_dist2(x3, y3, x1, y1, x2, y2) <= t2
            or _point_segment_dist2(x4, y4, x1, y1, x2, y2) <= t2):
        return REL_ENDPOINT_ON_INTERIOR

    a_straddles = (d1 > 0.0 and d1 * d1 > ta2 and d2 < 0.0 and d2 * d2 > ta2) or \
                  (d1 < 0.0 and d1 * d1 > ta2 and d2 > 0.0 and d2 * d2 > ta2)
    b_straddles = (d3 > 0.0 and d3 * d3 > tb2 and d4 < 0.0 and d4 * d4 > tb2) or \
                  (d3 < 0.0 and d3 * d3 > tb2 and d4 > 0.0 and d4 * d4 > tb2)
    if a_straddles and b_straddles:
        return REL_PROPER_CROSS
    return REL_DISJOINT


def segment_relation(a1: Point, a2: Point, b1: Point, b2: Point,
                     pol: TolerancePolicy = DEFAULT_TOL) -> SegmentRelation:
    """Classify how two segments meet.

    ``shared_endpoint`` means exactly one endpoint pair coincides within
    geom_tol and the interiors are otherwise disjoint. Any of
    ``proper_cross`` / ``overlap`` / ``endpoint_on_interior`` violates
    matchstick planarity.
    """
    t2 = pol.geom_tol * pol.geom_tol
    for (p, q) in ((a1, a2), (b1, b2)):
        dx = q[0] - p[0]
        dy = q[1] - p[1]
        if dx * dx + dy * dy <= t2:
            raise DegenerateSegment(f"segment endpoints coincide: {p}, {q}")
    code = classify_segments(a1[0], a1[1], a2[0], a2[1],
                             b1[0], b1[1], b2[0], b2[1], pol.geom_tol)
    return _REL_BY_CODE[code]


def interior_angle(prev: Point, corner: Point, nxt: Point) -> float:
    """Angle at ``corner`` between the rays to ``prev`` and ``nxt``, in [0, pi]."""
    ux = prev[0] - corner[0]
    uy = prev[1] - corner[1]
    vx = nxt[0] - corner[0]
    vy = nxt[1] - corner[1]
    nu = math.hypot(ux, uy)
    nv = math.hypot(vx, vy)
    if nu == 0.0 or nv == 0.0:
        raise DegenerateSegment("zero-length ray at corner")
    c = (ux * vx + uy * vy) / (nu * nv)
    c = max(-1.0, min(1.0, c))
    return math.acos(c)


def rhombus_small_angle(a: Point, b: Point, c: Point, d: Point,
                        pol: TolerancePolicy = DEFAULT_TOL) -> float:
    """Smaller interior angle of the rhombus with corners a, b, c, d in order.

    The quadrilateral must be simple with four unit sides; otherwise
    :class:`NotARhombus` is raised.
    """
    corners = (a, b, c, d)
    for i in range(4):
        p, q = corners[i], corners[(i + 1) % 4]
        if not unit_distance(p, q, pol):
            raise NotARhombus(f"side {i} is not unit length: {p} -> {q}")
    # adjacent sides must meet only at their shared corner; opposite sides
    # must stay disjoint
    for i in range(4):
        p1, p2 = corners[i], corners[(i + 1) % 4]
        q1, q2 = corners[(i + 1) % 4], corners[(i + 2) % 4]
        if segment_relation(p1, p2, q1, q2, pol) is not SegmentRelation.SHARED_ENDPOINT:
            raise NotARhombus("adjacent sides do not meet in a single corner")
    for (i, j) in ((0, 2), (1, 3)):
        p1, p2 = corners[i], corners[(i + 1) % 4]
        q1, q2 = corners[j], corners[(j + 1) % 4]
        if segment_relation(p1, p2, q1, q2, pol) is not SegmentRelation.DISJOINT:
            raise NotARhombus("opposite sides intersect")
    theta = interior_angle(a, b, c)
    return min(theta, math.pi - theta)


def rotate_point(p: Point, angle: float) -> Point:
    ca = math.cos(angle)
    sa = math.sin(angle)
    return (p[0] * ca - p[1] * sa, p[0] * sa + p[1] * ca)
