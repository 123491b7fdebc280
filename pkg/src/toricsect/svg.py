"""Deterministic SVG renderings of toric loops and shadow diagrams.

Geometry is exact up to emission; coordinates are then printed with six
decimals, rounded half-even, so output is byte-stable across platforms.
"""
from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from math import floor

from .curves import ShadowDiagram
from .diagram import ToricLoop, _check_nondegenerate
from .lattice import format_slope

_CTX = Context(prec=40)
_QUANT = Decimal("0.000001")

FAMILY_COLORS = {1: "red", 2: "blue", 3: "green", 4: "purple"}


def _dec(x) -> Decimal:
    if isinstance(x, Decimal):
        return x
    x = Fraction(x)
    return _CTX.divide(Decimal(x.numerator), Decimal(x.denominator))


def fmt(x) -> str:
    s = str(_dec(x).quantize(_QUANT, rounding=ROUND_HALF_EVEN))
    return "0.000000" if s == "-0.000000" else s


def _sqrt(x: Fraction) -> Decimal:
    return _dec(x).sqrt(_CTX)


def cayley_point(a: int, b: int) -> tuple[Fraction, Fraction]:
    """Boundary point of the disk model for the slope ``b/a`` (``1/0`` maps to (1, 0))."""
    r = a * a + b * b
    return Fraction(b * b - a * a, r), Fraction(-2 * a * b, r)


def _geodesic(P, Q) -> str:
    # screen coordinates flip y
    px, py = P[0], -P[1]
    qx, qy = Q[0], -Q[1]
    dot = P[0] * Q[0] + P[1] * Q[1]
    if dot == -1:
        return f"M {fmt(px)} {fmt(py)} L {fmt(qx)} {fmt(qy)}"
    cx, cy = (px + qx) / (1 + dot), (py + qy) / (1 + dot)
    radius = fmt(_sqrt((px - cx) ** 2 + (py - cy) ** 2))
    sweep = 1 if (px - cx) * (qy - cy) - (py - cy) * (qx - cx) > 0 else 0
    return f"M {fmt(px)} {fmt(py)} A {radius} {radius} 0 0 {sweep} {fmt(qx)} {fmt(qy)}"


def emit_farey_svg(d: ToricLoop) -> str:
    """Loop drawn in the Farey tessellation of the disk: one vertex per slope, one geodesic per edge."""
    _check_nondegenerate(d)
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.2 -1.2 2.4 2.4" width="480" height="480">',
        '<circle class="boundary" cx="0" cy="0" r="1" fill="none" stroke="black" stroke-width="0.01"/>',
    ]
    n = len(d)
    for i in range(n):
        u, w = d.slopes[i].rep, d.slopes[(i + 1) % n].rep
        path = _geodesic(cayley_point(*u), cayley_point(*w))
        lines.append(f'<path class="edge" d="{path}" fill="none" stroke="red" stroke-width="0.01"/>')
    seen = []
    for s in d.slopes:
        if s not in seen:
            seen.append(s)
    for s in seen:
        x, y = cayley_point(*s.rep)
        lines.append(f'<circle class="vertex" cx="{fmt(x)}" cy="{fmt(-y)}" r="0.03" fill="black"/>')
        lines.append(f'<text x="{fmt(x * Fraction(11, 10))}" y="{fmt(-y * Fraction(11, 10))}" '
                     f'font-size="0.08" text-anchor="middle">{format_slope(s)}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _wrap_pieces(seg):
    """Split a lifted segment at the integer grid and translate each piece into the unit square."""
    (sx, sy), (ex, ey) = seg
    dx, dy = ex - sx, ey - sy
    cuts = {Fraction(0), Fraction(1)}
    for s, dv in ((sx, dx), (sy, dy)):
        if dv:
            lo, hi = sorted((s, s + dv))
            for k in range(floor(lo) + 1, floor(hi) + 1):
                lam = (k - s) / dv
                if 0 < lam < 1:
                    cuts.add(lam)
    cuts = sorted(cuts)
    pieces = []
    for a, b in zip(cuts, cuts[1:]):
        mid = (a + b) / 2
        fx, fy = floor(sx + mid * dx), floor(sy + mid * dy)
        pieces.append(((sx + a * dx - fx, sy + a * dy - fy), (sx + b * dx - fx, sy + b * dy - fy)))
    return pieces


def emit_shadow_svg(s: ShadowDiagram) -> str:
    """Bridge points and the four arc families on the unit square with side identifications."""
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-0.1 -0.1 1.2 1.2" width="480" height="480">',
        '<rect class="torus" x="0" y="0" width="1" height="1" fill="none" stroke="black" stroke-width="0.004"/>',
        # single chevrons pair the vertical sides, double chevrons the horizontal ones
        '<path class="ident" d="M -0.02 0.52 L 0 0.48 L 0.02 0.52 M 0.98 0.52 L 1 0.48 L 1.02 0.52" '
        'fill="none" stroke="black" stroke-width="0.004"/>',
        '<path class="ident" d="M 0.48 -0.02 L 0.52 0 L 0.48 0.02 M 0.50 -0.02 L 0.54 0 L 0.50 0.02 '
        'M 0.48 0.98 L 0.52 1 L 0.48 1.02 M 0.50 0.98 L 0.54 1 L 0.50 1.02" '
        'fill="none" stroke="black" stroke-width="0.004"/>',
    ]
    for arc in s.arcs:
        parts = []
        for (ax, ay), (bx, by) in _wrap_pieces(arc.segment):
            parts.append(f"M {fmt(ax)} {fmt(1 - ay)} L {fmt(bx)} {fmt(1 - by)}")
        color = FAMILY_COLORS[arc.family]
        lines.append(f'<path class="arc family-{arc.family}" d="{" ".join(parts)}" '
                     f'fill="none" stroke="{color}" stroke-width="0.004"/>')
    for x, y in s.bridge_points:
        lines.append(f'<circle class="bridge-point" cx="{fmt(x)}" cy="{fmt(1 - y)}" r="0.008" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
