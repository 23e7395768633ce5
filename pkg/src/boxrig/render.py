"""Minimal SVG 1.1 output: rect, polyline, circle, text only.

Figures are line drawings; the y axis is flipped so larger y draws upward.
The viewBox is the data bounding box plus a 5% margin.
"""

from __future__ import annotations

from .boxhull import BoxHull, DisjointCover
from .geom import PointSet

POINT_STYLE = 'fill="black"'
BOUNDARY_STYLE = 'fill="none" stroke="black" stroke-width="{w}"'
PIECE_STYLE = 'fill="#9ecae1" fill-opacity="0.55" stroke="#3182bd" stroke-width="{w}"'


def _document(parts: list[str], bbox) -> str:
    x1, y1, x2, y2 = bbox
    w = max(x2 - x1, 1)
    h = max(y2 - y1, 1)
    mx, my = 0.05 * w, 0.05 * h
    view = f"{x1 - mx:g} {-(y2 + my):g} {w + 2 * mx:g} {h + 2 * my:g}"
    body = "\n".join(parts)
    return (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{view}">\n{body}\n</svg>\n')


def _points(ps: PointSet, radius: float) -> list[str]:
    return [f'<circle cx="{p.x}" cy="{-p.y}" r="{radius:g}" {POINT_STYLE}/>'
            for p in ps]


def _scale(ps: PointSet) -> float:
    x1, y1, x2, y2 = (min(ps.xs), min(ps.ys), max(ps.xs), max(ps.ys))
    return max(x2 - x1, y2 - y1, 1) / 200.0


def hull_svg(ps: PointSet, hull: BoxHull) -> str:
    s = _scale(ps)
    pts = " ".join(f"{x},{-y}" for x, y in hull.boundary)
    first = hull.boundary[0]
    closed = f"{pts} {first[0]},{-first[1]}"
    parts = [f'<polyline points="{closed}" '
             + BOUNDARY_STYLE.format(w=f"{s:g}") + "/>"]
    parts += _points(ps, 1.6 * s)
    parts.append(f'<text x="{min(ps.xs)}" y="{-(max(ps.ys))}" '
                 f'font-size="{8 * s:g}">n={ps.n} area={hull.area()}</text>')
    return _document(parts, hull.bbox)


def cover_svg(ps: PointSet, cover: DisjointCover) -> str:
    s = _scale(ps)
    parts = []
    for piece in cover.pieces:
        x1, y1 = piece.lo
        x2, y2 = piece.hi
        parts.append(f'<rect x="{x1}" y="{-y2}" width="{x2 - x1}" '
                     f'height="{y2 - y1}" ' + PIECE_STYLE.format(w=f"{0.5 * s:g}") + "/>")
    parts += _points(ps, 1.6 * s)
    bbox = (min(ps.xs), min(ps.ys), max(ps.xs), max(ps.ys))
    return _document(parts, bbox)
