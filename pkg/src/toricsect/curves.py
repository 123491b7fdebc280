"""Curves of bidegree (p, q) in CP^1 x CP^1: bridge data, shadow diagrams, branched covers.

Torus coordinates are rescaled so the central torus is the unit square
``[0, 1)^2`` and all geometry is exact (``fractions.Fraction``).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import DegenerateDegree, DivisibilityViolation, NonGenericPlacement, NonPositiveDegree
from .lattice import extended_gcd

Point = tuple[Fraction, Fraction]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CurveParams:
    p: int
    q: int
    bridge_b: int
    genus: int
    chi: int
    homology: tuple[int, int]
    pi1_order: int

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "bridge_b": self.bridge_b, "genus": self.genus,
                "chi": self.chi, "homology": list(self.homology), "pi1_order": self.pi1_order}


def _check_degrees(p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise NonPositiveDegree(f"bidegree ({p},{q}) must be positive")


def curve_params(p: int, q: int) -> CurveParams:
    _check_degrees(p, q)
    b = p * q - p - q + 2
    return CurveParams(p, q, b, (p - 1) * (q - 1), 4 - 2 * b, (p, q), gcd(p, q))


@dataclass(frozen=True)
class ShadowArc:
    family: int
    start: int
    end: int
    # lifted endpoints in R^2; start lies in [0,1)^2, end may leave it
    segment: tuple[Point, Point]


@dataclass(frozen=True)
class ShadowDiagram:
    p: int
    q: int
    bridge_b: int
    bridge_points: tuple[Point, ...]
    arcs: tuple[ShadowArc, ...]
    curve13_class: tuple[int, int]
    curve24_class: tuple[int, int]
    degenerate: bool = False

    def family(self, k: int) -> list[ShadowArc]:
        return [a for a in self.arcs if a.family == k]

    def crossing_counts(self) -> tuple[int, int]:
        """Arcs of families 1,3 crossing a generic horizontal circle; of 2,4 a vertical one."""
        ys = {pt[1] for pt in self.bridge_points}
        xs = {pt[0] for pt in self.bridge_points}
        y0, x0 = _generic_level(ys), _generic_level(xs)
        h = sum(_crossings(a.segment, 1, y0) for a in self.arcs if a.family in (1, 3))
        v = sum(_crossings(a.segment, 0, x0) for a in self.arcs if a.family in (2, 4))
        return h, v

    def validate(self) -> None:
        """Check every structural invariant; raise :class:`NonGenericPlacement` on failure."""
        b = self.bridge_b
        if len(self.bridge_points) != 2 * b or len(set(self.bridge_points)) != 2 * b:
            raise NonGenericPlacement(f"expected {2 * b} distinct bridge points")
        incident = [[0] * 5 for _ in self.bridge_points]
        for arc in self.arcs:
            incident[arc.start][arc.family] += 1
            incident[arc.end][arc.family] += 1
        for k in range(1, 5):
            if len(self.family(k)) != b:
                raise NonGenericPlacement(f"family {k} has {len(self.family(k))} arcs, expected {b}")
        # one arc of each family per point makes same-family arcs share no endpoint
        if any(row[1:] != [1, 1, 1, 1] for row in incident):
            raise NonGenericPlacement("a bridge point is not met once by each family")
        for i, pt in enumerate(self.bridge_points):
            dirs = [None] * 5
            for arc in self.arcs:
                if arc.start == i:
                    dirs[arc.family] = _sub(arc.segment[1], arc.segment[0])
                if arc.end == i:
                    dirs[arc.family] = _sub(arc.segment[0], arc.segment[1])
            if not _ccw_order(dirs[1:]):
                raise NonGenericPlacement(f"families not counterclockwise at bridge point {i}")
        h, v = self.crossing_counts()
        if (h, v) != (abs(self.curve13_class[1]), abs(self.curve24_class[0])):
            raise NonGenericPlacement(f"pairing counts {(h, v)} do not match the curve classes")

    def to_json(self) -> dict:
        params = curve_params(self.p, self.q).to_json()
        params["bridge_points"] = [[[x.numerator, x.denominator], [y.numerator, y.denominator]]
                                   for x, y in self.bridge_points]
        params["arcs"] = [{"family": a.family, "from": a.start, "to": a.end} for a in self.arcs]
        return params


def _sub(u: Point, v: Point) -> Point:
    return (u[0] - v[0], u[1] - v[1])


def _cross(u, v) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def _ccw_order(dirs) -> bool:
    # four directions, pairwise opposite 1/3 and 2/4, ordered 1,2,3,4 counterclockwise
    d1, d2, d3, d4 = dirs
    return (_cross(d1, d2) > 0 and _cross(d2, d3) > 0
            and _cross(d3, d4) > 0 and _cross(d4, d1) > 0)


def _generic_level(values) -> Fraction:
    vals = sorted(set(values))
    if len(vals) == 1:
        return (vals[0] + HALF) % 1
    return (vals[0] + vals[1]) / 2


def _crossings(segment, axis: int, level: Fraction) -> int:
    lo, hi = sorted((segment[0][axis], segment[1][axis]))
    # integers k with lo < level + k < hi
    count = 0
    k = -((level - lo) // 1)
    while level + k < hi:
        if level + k > lo:
            count += 1
        k += 1
    return count


def _multicurve(cls: tuple[int, int], base: Point, other: tuple[int, int], c_other: Fraction):
    """Intersections of the class-``cls`` geodesic multicurve through ``base`` with ``other``.

    The other multicurve is ``other[0]*x + other[1]*y == c_other (mod 1)``.  Returns one
    list per component of ``(t, point, lifted)`` sorted by the parameter ``t`` in
    ``[0, 1)``, where ``lifted = base_k + t * (m, n)`` walks once around the component.
    """
    M, N = cls
    g = gcd(M, N)
    m, n = M // g, N // g
    # Bezout step (u, v) with n*u - m*v == 1 moves between parallel components
    _, u, w = extended_gcd(n, m)
    u, v = u, -w
    alpha, beta = other
    rate = alpha * m + beta * n
    steps = abs(rate)
    comps = []
    for k in range(g):
        bx = base[0] + Fraction(k, g) * u
        by = base[1] + Fraction(k, g) * v
        f0 = alpha * bx + beta * by
        t0 = ((c_other - f0) / rate) % Fraction(1, steps)
        pts = []
        for j in range(steps):
            t = t0 + Fraction(j, steps)
            lx, ly = bx + t * m, by + t * n
            pts.append((t, (lx % 1, ly % 1), (lx, ly)))
        comps.append(pts)
    return (m, n), comps


def shadow_diagram(p: int, q: int, allow_degenerate: bool = False) -> ShadowDiagram:
    """Exact shadow diagram of the (p, q) curve in bridge position.

    Families 1, 3 lie on the class ``(p-2, q)`` multicurve through ``(0, 1/2)``
    and families 2, 4 on the class ``(-p, q-2)`` multicurve through ``(1/2, 0)``.
    The two classes have determinant ``2b``, so the multicurves cross
    transversally in the ``2b`` bridge points.
    """
    _check_degrees(p, q)
    degenerate = p < 2 or q < 2
    if degenerate and not allow_degenerate:
        raise DegenerateDegree(f"bidegree ({p},{q}) needs p, q >= 2")
    b = curve_params(p, q).bridge_b
    cls_a, cls_b = (p - 2, q), (-p, q - 2)
    # A: q*x - (p-2)*y == c_a, B: (q-2)*x + p*y == c_b  (mod 1)
    c_a = Fraction(-(p - 2), 2) % 1
    c_b = Fraction(q - 2, 2) % 1
    dir_a, comps_a = _multicurve(cls_a, (Fraction(0), HALF), (q - 2, p), c_b)
    dir_b, comps_b = _multicurve(cls_b, (HALF, Fraction(0)), (q, -(p - 2)), c_a)

    pts_a = sorted({pt for comp in comps_a for _, pt, _ in comp})
    pts_b = sorted({pt for comp in comps_b for _, pt, _ in comp})
    if pts_a != pts_b or len(pts_a) != 2 * b:
        raise NonGenericPlacement(f"multicurves meet in {len(pts_a)} points, expected {2 * b}")
    index = {pt: i for i, pt in enumerate(pts_a)}

    # neighbours along each curve: (next point, lifted start, lifted end)
    edges = []  # (curve, i, j, seg)
    for curve, comps, d in (("A", comps_a, dir_a), ("B", comps_b, dir_b)):
        for comp in comps:
            L = len(comp)
            for s in range(L):
                t, pt, lifted = comp[s]
                t_next = comp[(s + 1) % L][0] + (1 if s + 1 == L else 0)
                start = pt
                end = (pt[0] + (t_next - t) * d[0], pt[1] + (t_next - t) * d[1])
                edges.append((curve, index[pt], index[comp[(s + 1) % L][1]], (start, end)))

    # two-colouring: consecutive points along either curve get opposite phases
    adj: list[list[int]] = [[] for _ in pts_a]
    for _, i, j, _ in edges:
        adj[i].append(j)
        adj[j].append(i)
    phase: list[Optional[int]] = [None] * len(pts_a)
    phase[0] = 1 if cls_a[0] >= 0 else -1
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if phase[j] is None:
                phase[j] = -phase[i]
                queue.append(j)
            elif phase[j] == phase[i]:
                raise NonGenericPlacement("arc families cannot alternate consistently")

    arcs = []
    for curve, i, j, seg in edges:
        fwd, back = (1, 3) if curve == "A" else (2, 4)
        arcs.append(ShadowArc(fwd if phase[i] == 1 else back, i, j, seg))
    arcs.sort(key=lambda a: (a.family, a.start, a.end))
    diagram = ShadowDiagram(p, q, b, tuple(pts_a), tuple(arcs), cls_a, cls_b, degenerate)
    diagram.validate()
    return diagram


def intersection_count(p: int, q: int) -> int:
    """Brute-force count of solutions of the two multicurve equations on the torus.

    Independent of :func:`shadow_diagram`: scans integer right-hand sides and
    collects the distinct solutions mod 1 by Cramer's rule.
    """
    _check_degrees(p, q)
    det = q * p + (p - 2) * (q - 2)
    den = 2 * abs(det)
    sgn = 1 if det > 0 else -1
    seen = set()
    # twice the constants: 2*c_a = -(p-2), 2*c_b = q-2; numerators over 2*|det|
    for i in range(abs(det)):
        ra = 2 * i - (p - 2)
        xa, ya = p * ra, -(q - 2) * ra
        for j in range(abs(det)):
            rb = 2 * j + (q - 2)
            seen.add((sgn * (xa + (p - 2) * rb) % den, sgn * (ya + q * rb) % den))
    return len(seen)


@dataclass(frozen=True)
class BridgeParams:
    g: int
    k: tuple[int, ...]
    b: int
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.k) != len(self.c):
            raise ValueError("k and c need one entry per sector")
        if self.g < 0 or min(self.k, default=0) < 0 or self.b < 1 or min(self.c, default=1) < 1:
            raise ValueError("bridge parameters out of range")

    @property
    def sectors(self) -> int:
        return len(self.k)


def branched_cover_params(g: int, k, b: int, c, n: int) -> tuple[int, tuple[int, ...]]:
    """Multisection parameters of the n-fold cyclic cover branched along a bridge surface."""
    if n < 1:
        raise ValueError("cover degree must be positive")
    params = BridgeParams(g, tuple(k), b, tuple(c))
    g2 = n * params.g + (n - 1) * (params.b - 1)
    k2 = tuple(n * ki + (n - 1) * (ci - 1) for ki, ci in zip(params.k, params.c))
    return g2, k2


@dataclass(frozen=True)
class CoverGenus:
    genus: int
    family: Optional[str] = None
    family_b2: Optional[int] = None
    sectors: int = 4

    @property
    def b2(self) -> int:
        # an efficient (g, 0) multisection with s sectors has b2 = (s - 2) g
        return (self.sectors - 2) * self.genus


def _family(p: int, q: int) -> tuple[Optional[str], Optional[int]]:
    if q % 2:
        return None, None
    h = q // 2
    if p == 2:
        return f"CP2#{4 * h + 1}CP2bar", 4 * h + 2
    if p == 4:
        return f"E({h})", 12 * h - 2
    if p == 6:
        return f"H({h})", None
    return None, None


def cyclic_cover_genus(p: int, q: int, n: int) -> CoverGenus:
    """Genus of the efficient 4-section of the n-fold cover branched along the (p, q) curve."""
    _check_degrees(p, q)
    if n < 2 or gcd(p, q) % n:
        raise DivisibilityViolation(f"cover degree {n} must be >= 2 and divide gcd({p},{q})")
    genus = n + (n - 1) * (p - 1) * (q - 1)
    family, fb2 = (None, None)
    if n == 2:
        family, fb2 = _family(p, q)
        if family is None:
            family, fb2 = _family(q, p)
    return CoverGenus(genus, family, fb2)
