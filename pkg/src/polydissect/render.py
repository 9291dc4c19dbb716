"""Deterministic SVG output for split arrangements.

Coordinates are emitted with fixed six-decimal formatting so that two
renders of the same input are byte-identical. The optional zoom window is
applied by analytic clipping, not by viewer-side cropping, which keeps
element counts testable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import MissingGraph
from .geom import DEFAULT_TOL, Tolerance
from .arrangement import SplitSegmentSet
from .planar import PlanarGraph, enumerate_faces, face_vertices, orbit_census
from .polygon import PolygonSpec

FULL_WINDOW = (-1.05, -1.05, 1.05, 1.05)


@dataclass(frozen=True)
class RenderOptions:
    scale: float = 400.0
    stroke_width: float = 1.0
    color_faces: bool = False
    zoom: tuple[float, float, float, float] | None = None
    label_orbits: bool = False

    def __post_init__(self) -> None:
        if self.scale <= 0.0:
            raise ValueError(f"scale must be positive, got {self.scale!r}")
        if self.stroke_width <= 0.0:
            raise ValueError(f"stroke_width must be positive, got {self.stroke_width!r}")
        if self.zoom is not None:
            x0, y0, x1, y1 = self.zoom
            if not (x0 < x1 and y0 < y1):
                raise ValueError(f"zoom window {self.zoom!r} is not ordered as x0,y0,x1,y1")
            nx = max(x0, min(0.0, x1))
            ny = max(y0, min(0.0, y1))
            if math.hypot(nx, ny) > 1.0:
                raise ValueError(f"zoom window {self.zoom!r} does not intersect the unit disk")


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def _clip_segment(x0, y0, x1, y1, win):
    """Liang-Barsky clip; None when the segment misses the window."""
    wx0, wy0, wx1, wy1 = win
    dx = x1 - x0
    dy = y1 - y0
    t0, t1 = 0.0, 1.0
    for p, q in ((-dx, x0 - wx0), (dx, wx1 - x0), (-dy, y0 - wy0), (dy, wy1 - y0)):
        if p == 0.0:
            if q < 0.0:
                return None
        else:
            r = q / p
            if p < 0.0:
                if r > t1:
                    return None
                if r > t0:
                    t0 = r
            else:
                if r < t0:
                    return None
                if r < t1:
                    t1 = r
    return (x0 + t0 * dx, y0 + t0 * dy, x0 + t1 * dx, y0 + t1 * dy)


def _clip_polygon(pts, win):
    """Sutherland-Hodgman clip of a polygon against the window."""
    wx0, wy0, wx1, wy1 = win

    def one_side(poly, axis, bound, keep_greater):
        out = []
        for (ax, ay), (bx, by) in zip(poly, poly[1:] + poly[:1]):
            va = ax if axis == 0 else ay
            vb = bx if axis == 0 else by
            ina = va >= bound if keep_greater else va <= bound
            inb = vb >= bound if keep_greater else vb <= bound
            if ina:
                out.append((ax, ay))
            if ina != inb:
                t = (bound - va) / (vb - va)
                out.append((ax + t * (bx - ax), ay + t * (by - ay)))
        return out

    poly = list(pts)
    for axis, bound, keep in ((0, wx0, True), (0, wx1, False), (1, wy0, True), (1, wy1, False)):
        if not poly:
            return []
        poly = one_side(poly, axis, bound, keep)
    return poly


def _orbit_fill(orbit: int, total: int) -> str:
    hue = (orbit * 360) // max(1, total)
    return f"hsl({hue},70%,55%)"


def render_svg(
    split: SplitSegmentSet,
    graph: PlanarGraph | None = None,
    opts: RenderOptions | None = None,
    tol: Tolerance = DEFAULT_TOL,
) -> str:
    """Render the arrangement as an SVG 1.1 document.

    One <line> element per (possibly clipped) split segment; with
    color_faces one <polygon> per inner face, filled by rotation orbit;
    with label_orbits one <text> with the orbit id at each face centroid.
    Both face options require the graph.
    """
    opts = opts or RenderOptions()
    if (opts.color_faces or opts.label_orbits) and graph is None:
        raise MissingGraph("color_faces/label_orbits need the planar graph")

    win = opts.zoom if opts.zoom is not None else FULL_WINDOW
    wx0, wy0, wx1, wy1 = win
    width = (wx1 - wx0) * opts.scale
    height = (wy1 - wy0) * opts.scale

    def to_canvas(x: float, y: float) -> tuple[float, float]:
        return (x - wx0) * opts.scale, (wy1 - y) * opts.scale

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]

    labels: list[tuple[float, float, int]] = []
    if opts.color_faces or opts.label_orbits:
        faces = enumerate_faces(graph)
        outer = next(f for f in faces if f.is_outer)
        spec = PolygonSpec(len(outer.boundary) // 2)
        census = orbit_census(faces, spec, tol)
        total = len(census.orbit_sizes)
        if opts.color_faces:
            parts.append('<g stroke="none">')
            for i, face in enumerate(faces):
                if face.is_outer:
                    continue
                pts = [(graph.vertices[v].x, graph.vertices[v].y)
                       for v in face_vertices(graph, face)]
                if opts.zoom is not None:
                    pts = _clip_polygon(pts, win)
                if len(pts) < 3:
                    continue
                coords = " ".join(
                    f"{_fmt(cx)},{_fmt(cy)}" for cx, cy in (to_canvas(x, y) for x, y in pts))
                parts.append(f'<polygon points="{coords}" '
                             f'fill="{_orbit_fill(census.face_orbits[i], total)}"/>')
            parts.append("</g>")
        if opts.label_orbits:
            for i, face in enumerate(faces):
                if face.is_outer:
                    continue
                c = face.centroid
                if wx0 <= c.x <= wx1 and wy0 <= c.y <= wy1:
                    labels.append((c.x, c.y, census.face_orbits[i]))

    parts.append(f'<g fill="none" stroke="#000000" '
                 f'stroke-width="{_fmt(opts.stroke_width)}" stroke-linecap="round">')
    for seg in split:
        coords = (seg.p0.x, seg.p0.y, seg.p1.x, seg.p1.y)
        if opts.zoom is not None:
            clipped = _clip_segment(*coords, win)
            if clipped is None:
                continue
            coords = clipped
        ax, ay = to_canvas(coords[0], coords[1])
        bx, by = to_canvas(coords[2], coords[3])
        parts.append(f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" '
                     f'x2="{_fmt(bx)}" y2="{_fmt(by)}"/>')
    parts.append("</g>")

    if labels:
        size = 0.03 * opts.scale
        parts.append(f'<g font-family="sans-serif" font-size="{_fmt(size)}" '
                     f'text-anchor="middle" fill="#000000">')
        for x, y, orbit in labels:
            cx, cy = to_canvas(x, y)
            parts.append(f'<text x="{_fmt(cx)}" y="{_fmt(cy)}">{orbit}</text>')
        parts.append("</g>")

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
