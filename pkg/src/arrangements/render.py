"""SVG drawings of arrangements, captioned with the (n k s) triple."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .arrangement import Arrangement
from .geometry import Line, Point
from .invariants import find_centrexes, summary_triple

MARK_RADIUS = 4.0
CAPTION_BAND = 28


def viewport(A: Arrangement) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(xmin, ymin, xmax, ymax) fitted to the marks with a 10% margin."""
    if A.points:
        xs = [p.x for p in A.points]
        ys = [p.y for p in A.points]
    else:
        # unit box plus the foot of each line from the origin
        xs, ys = [Fraction(0), Fraction(1)], [Fraction(0), Fraction(1)]
        for l in A.lines:
            r = Fraction(l.c, l.a * l.a + l.b * l.b)
            xs.append(l.a * r)
            ys.append(l.b * r)
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w, h = x1 - x0, y1 - y0
    span = max(w, h) or Fraction(1)
    if w == 0:
        x0, x1, w = x0 - span / 2, x1 + span / 2, span
    if h == 0:
        y0, y1, h = y0 - span / 2, y1 + span / 2, span
    mx, my = w / 10, h / 10
    return x0 - mx, y0 - my, x1 + mx, y1 + my


def clip(l: Line, box) -> Optional[tuple[Point, Point]]:
    x0, y0, x1, y1 = box
    hits = set()
    if l.b != 0:
        for x in (x0, x1):
            y = (l.c - l.a * x) / l.b
            if y0 <= y <= y1:
                hits.add(Point(x, y))
    if l.a != 0:
        for y in (y0, y1):
            x = (l.c - l.b * y) / l.a
            if x0 <= x <= x1:
                hits.add(Point(x, y))
    if len(hits) < 2:
        return None
    ordered = sorted(hits)
    return ordered[0], ordered[-1]


def render_svg(A: Arrangement, width: int = 400, height: int = 400, caption: Optional[str] = None) -> str:
    box = viewport(A)
    x0, y0, x1, y1 = box
    scale = min(Fraction(width) / (x1 - x0), Fraction(height) / (y1 - y0))
    ox = (width - (x1 - x0) * scale) / 2
    oy = (height - (y1 - y0) * scale) / 2

    def sx(p: Point) -> str:
        return f"{float(ox + (p.x - x0) * scale):.3f}"

    def sy(p: Point) -> str:
        return f"{float(height - oy - (p.y - y0) * scale):.3f}"

    total_h = height + CAPTION_BAND
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{total_h}" '
        f'viewBox="0 0 {width} {total_h}">',
        f'<rect x="0" y="0" width="{width}" height="{total_h}" fill="#ffffff"/>',
        '<g stroke="#333333" stroke-width="1.2">',
    ]
    for l in A.sorted_lines():
        seg = clip(l, box)
        if seg is None:
            continue
        p, q = seg
        out.append(f'<line x1="{sx(p)}" y1="{sy(p)}" x2="{sx(q)}" y2="{sy(q)}"/>')
    out.append("</g>")
    centrexes = set(find_centrexes(A))
    out.append('<g stroke="none">')
    for p in A.sorted_points():
        fill = "#1f5fd6" if p in centrexes else "#000000"
        out.append(f'<circle cx="{sx(p)}" cy="{sy(p)}" r="{MARK_RADIUS}" fill="{fill}"/>')
    out.append("</g>")
    t = summary_triple(A)
    text = caption if caption is not None else f"({t.n} {t.k} {t.s})"
    out.append(
        f'<text x="{width / 2:.1f}" y="{height + CAPTION_BAND - 9}" font-family="monospace" '
        f'font-size="14" text-anchor="middle">{text}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
