"""Static SVG figures: body, dotted circumcircle, densely dotted translates."""

from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

from .geometry import ConvexPolygon, circumball, contact_set

SIZE = 400
MARGIN = 24


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(K: ConvexPolygon, translations: Sequence = (), title: str = "") -> str:
    """SVG 1.1 text; byte-identical for identical input."""
    ball = circumball(K)
    cx, cy = float(ball.center[0]), float(ball.center[1])
    r = math.sqrt(float(ball.radius_sq))
    pts = [(float(x), float(y)) for x, y in K.vertices]
    polys = [pts] + [[(x + float(t[0]), y + float(t[1])) for x, y in pts] for t in translations]
    xs = [p[0] for poly in polys for p in poly] + [cx - r, cx + r]
    ys = [p[1] for poly in polys for p in poly] + [cy - r, cy + r]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    k = (SIZE - 2 * MARGIN) / max(x1 - x0, y1 - y0)

    def X(x):
        return _fmt(MARGIN + (x - x0) * k)

    def Y(y):
        return _fmt(SIZE - MARGIN - (y - y0) * k)

    def path(poly):
        return " ".join(f"{X(x)},{Y(y)}" for x, y in poly)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<g fill="none" stroke="black" stroke-width="1">')
    for poly in polys[1:]:
        out.append(f'<polygon points="{path(poly)}" stroke-dasharray="1,2"/>')
    out.append(f'<circle cx="{X(cx)}" cy="{Y(cy)}" r="{_fmt(r * k)}" stroke-dasharray="1,5"/>')
    out.append(f'<polygon points="{path(pts)}" stroke-width="1.5"/>')
    out.append("</g>")
    out.append(f'<circle cx="{X(cx)}" cy="{Y(cy)}" r="2" fill="black"/>')
    for v in contact_set(K, ball):
        out.append(f'<circle cx="{X(float(v[0]))}" cy="{Y(float(v[1]))}" r="2.5" fill="black"/>')
    if title:
        out.append(f'<text x="{MARGIN}" y="{MARGIN - 8}" font-family="serif" font-size="13">{escape(title)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
