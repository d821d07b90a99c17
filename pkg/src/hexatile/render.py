"""Deterministic SVG drawings of regions.

Each unit triangle is a filled polygon.  Weight-1/2 lozenge positions get a
shaded ellipse across their shared edge, and marked cells carry their label.
Output depends only on the region, so repeated runs are byte-identical.
"""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .region import Region, TriCell

__all__ = ["to_svg", "point_xy"]

_SQ3_2 = math.sqrt(3) / 2
_UNIT = 20.0
_PAD = 10.0


def point_xy(i: float, j: float) -> tuple[float, float]:
    """Cartesian position of the lattice point i*NE + j*N (y pointing up)."""
    return i * _SQ3_2, j + i / 2


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _centroid(cell: TriCell) -> tuple[float, float]:
    pts = [point_xy(*v) for v in cell.vertices()]
    return sum(p[0] for p in pts) / 3, sum(p[1] for p in pts) / 3


def to_svg(region: Region, unit: float = _UNIT, title: str | None = None) -> str:
    cells = sorted(region.cells)
    if cells:
        xs, ys = zip(*(point_xy(*v) for c in cells for v in c.vertices()))
    else:
        xs, ys = (0.0,), (0.0,)
    x0, y1 = min(xs), max(ys)
    width = (max(xs) - x0) * unit + 2 * _PAD
    height = (y1 - min(ys)) * unit + 2 * _PAD

    def tx(x: float, y: float) -> tuple[str, str]:
        return _fmt((x - x0) * unit + _PAD), _fmt((y1 - y) * unit + _PAD)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    label = title if title is not None else (str(region.spec) if region.spec else "region")
    out.append(f"<title>{escape(label)}</title>")
    out.append('<g id="cells" stroke="#333" stroke-width="0.6">')
    for c in cells:
        pts = " ".join(",".join(tx(*point_xy(*v))) for v in c.vertices())
        fill = "#f4f1e8" if c.level % 2 == 0 else "#dfe8f1"
        out.append(f'<polygon points="{pts}" fill="{fill}" data-cell="{c.strip},{c.level}"/>')
    out.append("</g>")

    if region.half_weight:
        out.append('<g id="half-weight" fill="#888" fill-opacity="0.55" stroke="none">')
        for pair in sorted(tuple(sorted(p)) for p in region.half_weight):
            (ax, ay), (bx, by) = (_centroid(c) for c in pair)
            cx, cy = tx((ax + bx) / 2, (ay + by) / 2)
            dx, dy = bx - ax, by - ay
            angle = -math.degrees(math.atan2(dy, dx))
            rx = math.hypot(dx, dy) / 2 * unit + unit * 0.15
            out.append(
                f'<ellipse cx="{cx}" cy="{cy}" rx="{_fmt(rx)}" ry="{_fmt(unit * 0.2)}" '
                f'transform="rotate({_fmt(angle)} {cx} {cy})"/>'
            )
        out.append("</g>")

    if region.marks:
        out.append('<g id="marks" font-family="sans-serif" text-anchor="middle" dominant-baseline="central">')
        size = _fmt(unit * 0.45)
        for name, c in region.marks:
            x, y = tx(*_centroid(c))
            out.append(f'<text x="{x}" y="{y}" font-size="{size}">{escape(name)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
