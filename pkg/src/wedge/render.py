"""Deterministic SVG 1.1 output for a Figure.

Every number in the output is an exact rational rendered with
``approx_decimal`` at 6 fractional digits, so equal figures give equal bytes.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .geometry import Figure, Point
from .numeric import approx_decimal, format_rat

DIGITS = 6

# fill colours for --shade, applied in canonical triangle order: even index, odd index
SHADE_COLORS = ("#e8d8b0", "#b08d57")


def _num(r: Fraction) -> str:
    return approx_decimal(r, DIGITS)


def render_svg(fig: Figure, shade: bool = False, labels: bool = True) -> str:
    """Render ``fig`` with the y axis pointing up (A at the bottom left).

    Segments are drawn as lines and points as small circles.  Triangles are
    only drawn when ``shade`` is set, coloured alternately from SHADE_COLORS.
    """
    pts = fig.points
    xs = [p.x for p in pts.values()] or [Fraction(0)]
    ys = [p.y for p in pts.values()] or [Fraction(0)]
    if fig.side is not None:
        xs = xs + [Fraction(0), fig.side]
        ys = ys + [Fraction(0), fig.side]
    min_x, max_x, min_y, max_y = min(xs), max(xs), min(ys), max(ys)
    width = (max_x - min_x) or Fraction(1)
    height = (max_y - min_y) or Fraction(1)
    scale = max(width, height)
    stroke = scale / 200
    radius = scale / 120
    font = scale / 25

    def xy(p: Point) -> tuple[str, str]:
        # flip: y' = min_y + max_y - y keeps the viewBox origin at (min_x, min_y)
        return _num(p.x), _num(min_y + max_y - p.y)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_num(min_x)} {_num(min_y)} {_num(width)} {_num(height)}">',
        "<!-- y axis flipped: svg_y = min_y + max_y - y, so the first corner sits bottom left -->",
    ]
    if fig.side is not None:
        out.append(f"<!-- side {escape(format_rat(fig.side))} -->")
    if shade:
        out.append('<g id="triangles" stroke="none">')
        for i, (name, vs) in enumerate(fig.triangles):
            coords = " ".join(",".join(xy(pts[v])) for v in vs)
            color = SHADE_COLORS[i % 2]
            out.append(f'<polygon id="{escape(name)}" points="{coords}" fill="{color}"/>')
        out.append("</g>")
    out.append(f'<g id="segments" stroke="black" stroke-width="{_num(stroke)}" stroke-linecap="round">')
    for p, q in fig.segments:
        x1, y1 = xy(pts[p])
        x2, y2 = xy(pts[q])
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    out.append('<g id="points" fill="black">')
    for name, p in sorted(pts.items()):
        x, y = xy(p)
        out.append(f'<circle id="pt-{escape(name)}" cx="{x}" cy="{y}" r="{_num(radius)}"/>')
    out.append("</g>")
    if labels:
        # labels sit on the side of each point facing the centre, so they stay inside the viewBox
        cx, cy = (min_x + max_x) / 2, (min_y + max_y) / 2
        gap = radius * 2
        out.append(f'<g id="labels" font-family="serif" font-size="{_num(font)}" fill="#333333">')
        for name, p in sorted(pts.items()):
            right = p.x > cx
            lx = p.x - gap if right else p.x + gap
            sy = min_y + max_y - p.y
            ly = sy + gap + font if p.y > cy else sy - gap
            anchor = "end" if right else "start"
            out.append(f'<text x="{_num(lx)}" y="{_num(ly)}" text-anchor="{anchor}">{escape(name)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
