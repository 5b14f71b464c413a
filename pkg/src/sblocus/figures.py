"""SVG cross-section figures of the chamber decompositions.

Geometry stays exact until serialization: slice coordinates are rational and
only rounded to six decimal places when written into path data.  Each chamber
becomes one ``<g class="chamber">`` group (so region counts are checkable
structurally), walls are drawn where adjacent chambers differ, and every named
ray and every chamber receives exactly one label.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arrangement import Pt, point_to_slice, polygon_area
from .inference import Decomposition, VerificationReport

__all__ = ["FigureSpec", "render_svg"]

_PALETTE = [
    "#dbeafe", "#dcfce7", "#fee2e2", "#fef9c3", "#f3e8ff", "#cffafe",
    "#fde68a", "#e2e8f0", "#fbcfe8", "#d9f99d", "#bfdbfe", "#fecaca",
    "#bbf7d0", "#fde2e4", "#e0e7ff", "#fef3c7", "#ccfbf1", "#fae8ff",
    "#ecfccb", "#fed7aa", "#e4e4e7", "#c7d2fe",
]


@dataclass
class FigureSpec:
    """Layout parameters for a decomposition figure."""

    width: int = 760
    height: int = 760
    margin: int = 70
    label_offsets: dict[str, tuple[float, float]] = field(default_factory=dict)
    chamber_numbers: dict[int, int] = field(default_factory=dict)  # chamber -> item id


def _fmt(value: float) -> str:
    return f"{value:.6f}"


class _Viewport:
    def __init__(self, points: list[Pt], spec: FigureSpec):
        xs = [point_to_slice(p).x for p in points]
        ys = [point_to_slice(p).y for p in points]
        self.min_x, self.max_x = min(xs), max(xs)
        self.min_y, self.max_y = min(ys), max(ys)
        span_x = self.max_x - self.min_x
        span_y = self.max_y - self.min_y
        usable_w = spec.width - 2 * spec.margin
        usable_h = spec.height - 2 * spec.margin
        self.scale = min(Fraction(usable_w) / span_x, Fraction(usable_h) / span_y)
        self.spec = spec

    def to_px(self, p: Pt) -> tuple[float, float]:
        s = point_to_slice(p)
        x = self.spec.margin + float((s.x - self.min_x) * self.scale)
        # SVG y grows downward; flip so the figure matches the slice plane.
        y = self.spec.height - self.spec.margin - float((s.y - self.min_y) * self.scale)
        return x, y


def _polygon_path(points: tuple[Pt, ...], vp: _Viewport) -> str:
    coords = [vp.to_px(p) for p in points]
    head = f"M {_fmt(coords[0][0])} {_fmt(coords[0][1])}"
    rest = " ".join(f"L {_fmt(x)} {_fmt(y)}" for x, y in coords[1:])
    return f"{head} {rest} Z"


def render_svg(
    dec: Decomposition,
    report: Optional[VerificationReport] = None,
    spec: Optional[FigureSpec] = None,
) -> str:
    """Render the chamber decomposition as an SVG 1.1 document."""
    spec = spec or FigureSpec()
    arr = dec.arrangement
    vp = _Viewport(list(arr.triangle), spec)

    numbering = dict(spec.chamber_numbers)
    if report is not None and not numbering:
        for m in report.per_chamber:
            if m.item_id is not None:
                numbering[m.chamber_index] = m.item_id

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        '<rect width="100%" height="100%" fill="#ffffff"/>',
    ]

    # Chamber fills, one group per chamber.
    for ch in dec.chambers:
        item = numbering.get(ch.index)
        color = _PALETTE[(item - 1) % len(_PALETTE)] if item else "#f4f4f5"
        attrs = f' data-item="{item}"' if item is not None else ""
        parts.append(f'<g class="chamber"{attrs}>')
        for fi in ch.face_indices:
            face = arr.faces2[fi]
            parts.append(
                f'<path d="{_polygon_path(face.vertices, vp)}" fill="{color}" stroke="none"/>'
            )
        parts.append("</g>")

    # Walls: edges whose two sides lie in different chambers, plus the
    # effective-triangle boundary.
    parts.append('<g class="walls" stroke="#1f2937" stroke-width="1.2" fill="none">')
    for ekey, incident in sorted(arr.edge_faces.items()):
        boundary = len(incident) == 1
        wall = boundary or (
            dec.face_chamber[incident[0]] != dec.face_chamber[incident[1]]
        )
        if not wall:
            continue
        (x1, y1), (x2, y2) = vp.to_px(ekey[0]), vp.to_px(ekey[1])
        parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
        )
    parts.append("</g>")

    # Chamber numbers at the centroid of the largest member face.
    parts.append(
        '<g class="chamber-numbers" font-family="Helvetica, Arial, sans-serif" '
        'font-size="15" text-anchor="middle" fill="#111827">'
    )
    for ch in dec.chambers:
        biggest = max(
            ch.face_indices, key=lambda fi: polygon_area(arr.faces2[fi].vertices)
        )
        x, y = vp.to_px(arr.faces2[biggest].sample)
        label = str(numbering.get(ch.index, "?"))
        parts.append(f'<text x="{_fmt(x)}" y="{_fmt(y + 5)}">{label}</text>')
    parts.append("</g>")

    # Ray markers and labels, pushed slightly outward from the figure center.
    center = vp.to_px(_mean_point(list(arr.rays.values())))
    parts.append(
        '<g class="ray-labels" font-family="Helvetica, Arial, sans-serif" '
        'font-size="14" fill="#7f1d1d">'
    )
    for name in arr.rays:
        x, y = vp.to_px(arr.rays[name])
        dx, dy = spec.label_offsets.get(name, _outward(x, y, center))
        parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="2.4" fill="#7f1d1d"/>')
        parts.append(
            f'<text x="{_fmt(x + dx)}" y="{_fmt(y + dy)}" text-anchor="middle">{_esc(name)}</text>'
        )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _mean_point(points: list[Pt]) -> Pt:
    from .arrangement import _centroid

    return _centroid(points)


def _outward(x: float, y: float, center: tuple[float, float]) -> tuple[float, float]:
    dx, dy = x - center[0], y - center[1]
    norm = (dx * dx + dy * dy) ** 0.5 or 1.0
    return (18.0 * dx / norm, 18.0 * dy / norm + 4.0)


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
