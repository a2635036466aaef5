"""Deterministic SVG rendering of matchstick graphs.

Identical input produces byte-identical output: coordinates are formatted
with a fixed precision and elements are emitted in a fixed order (faces,
disk, edges, vertices, annotations).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .faces import FaceDecomposition, FaceKind, classify_faces
from .graph import MatchstickGraph

_FACE_FILL = {
    FaceKind.TRIANGLE: "#e8a0a0",
    FaceKind.RHOMBUS: "#a8c4e8",
    FaceKind.FAT_RHOMBUS: "#f2c98a",
    FaceKind.OTHER: "#d9d9d9",
}


@dataclass(frozen=True)
class RenderStyle:
    """Visual parameters; all optional annotations default to off."""

    scale: float = 60.0
    vertex_radius: float = 2.5
    margin: float = 24.0
    edge_width: float = 1.6
    dashed_edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)
    color_faces: bool = False
    show_disk: bool = False
    arrows: tuple[tuple[tuple[float, float], tuple[float, float], str], ...] = ()

    def __post_init__(self) -> None:
        if not (self.scale > 0):
            raise ValueError("scale must be positive")


def _f(v: float) -> str:
    s = format(v, ".4f")
    return "0.0000" if s == "-0.0000" else s


def render_svg(g: MatchstickGraph, fd: FaceDecomposition | None = None,
               style: RenderStyle | None = None) -> str:
    """Render the drawing as SVG 1.1 text.

    ``fd`` enables face coloring when ``style.color_faces`` is set; dashed
    edge classes are given as vertex pairs in ``style.dashed_edges``.
    """
    style = style or RenderStyle()
    xs = [p[0] for p in g.vertices]
    ys = [p[1] for p in g.vertices]
    if style.show_disk and g.disk is not None:
        xs += [g.disk.center[0] - g.disk.radius, g.disk.center[0] + g.disk.radius]
        ys += [g.disk.center[1] - g.disk.radius, g.disk.center[1] + g.disk.radius]
    for (origin, vec, _label) in style.arrows:
        xs += [origin[0], origin[0] + vec[0]]
        ys += [origin[1], origin[1] + vec[1]]
    if not xs:
        xs = [0.0]
        ys = [0.0]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    s = style.scale
    pad = style.margin
    width = (maxx - minx) * s + 2 * pad
    height = (maxy - miny) * s + 2 * pad

    def tx(x: float) -> float:
        return (x - minx) * s + pad

    def ty(y: float) -> float:
        return (maxy - y) * s + pad

    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append('<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
               '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">')
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
               f'width="{_f(width)}" height="{_f(height)}" '
               f'viewBox="0 0 {_f(width)} {_f(height)}">')

    if style.color_faces and fd is not None:
        classes = classify_faces(
            g, fd, g.disk.radius if g.disk is not None else None)
        for fid, walk in enumerate(fd.walks):
            if fid == fd.outer_face_id or not walk:
                continue
            fill = _FACE_FILL[classes[fid].kind]
            pts = " ".join(f"{_f(tx(g.vertices[u][0]))},{_f(ty(g.vertices[u][1]))}"
                           for (u, _v) in walk)
            out.append(f'<polygon points="{pts}" fill="{fill}" stroke="none"/>')

    if style.show_disk and g.disk is not None:
        cx, cy = g.disk.center
        out.append(f'<circle cx="{_f(tx(cx))}" cy="{_f(ty(cy))}" '
                   f'r="{_f(g.disk.radius * s)}" fill="none" '
                   f'stroke="#888888" stroke-width="1.0" stroke-dasharray="6,4"/>')

    for (i, j) in g.edges:
        (x1, y1), (x2, y2) = g.vertices[i], g.vertices[j]
        dash = ' stroke-dasharray="7,5"' if (i, j) in style.dashed_edges else ""
        out.append(f'<line x1="{_f(tx(x1))}" y1="{_f(ty(y1))}" '
                   f'x2="{_f(tx(x2))}" y2="{_f(ty(y2))}" '
                   f'stroke="#000000" stroke-width="{_f(style.edge_width)}"{dash}/>')

    for (x, y) in g.vertices:
        out.append(f'<circle cx="{_f(tx(x))}" cy="{_f(ty(y))}" '
                   f'r="{_f(style.vertex_radius)}" fill="#000000"/>')

    for (origin, vec, label) in style.arrows:
        x1, y1 = origin
        x2, y2 = origin[0] + vec[0], origin[1] + vec[1]
        out.append(f'<line x1="{_f(tx(x1))}" y1="{_f(ty(y1))}" '
                   f'x2="{_f(tx(x2))}" y2="{_f(ty(y2))}" '
                   f'stroke="#c03030" stroke-width="2.0"/>')
        ang = math.atan2(ty(y2) - ty(y1), tx(x2) - tx(x1))
        ax, ay = tx(x2), ty(y2)
        left = (ax - 9 * math.cos(ang - 0.4), ay - 9 * math.sin(ang - 0.4))
        right = (ax - 9 * math.cos(ang + 0.4), ay - 9 * math.sin(ang + 0.4))
        out.append(f'<polygon points="{_f(ax)},{_f(ay)} '
                   f'{_f(left[0])},{_f(left[1])} {_f(right[0])},{_f(right[1])}" '
                   f'fill="#c03030"/>')
        if label:
            out.append(f'<text x="{_f(ax + 6)}" y="{_f(ay - 6)}" '
                       f'font-family="serif" font-size="14" '
                       f'fill="#c03030">{label}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
