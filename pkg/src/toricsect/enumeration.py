"""Toric loops of definite 4-manifolds, enumerated up to conjugation."""
from __future__ import annotations

from dataclasses import dataclass

from .classify import blow_up
from .diagram import ToricLoop, canonical_form, loop_from_canonical, validate_loop

DEFAULT_LIMIT = 14

CP2_TRIPLE = ("0/1", "1/0", "1/1")


@dataclass(frozen=True)
class EnumerationResult:
    n: int
    dihedral: bool
    loops: tuple[ToricLoop, ...]

    @property
    def count(self) -> int:
        return len(self.loops)


def _closure(n: int, dihedral: bool) -> list:
    layer = {canonical_form(validate_loop(CP2_TRIPLE), dihedral)}
    for _ in range(n - 3):
        nxt = set()
        for form in layer:
            d = loop_from_canonical(form)
            for i in range(1, len(d) + 1):
                nxt.add(canonical_form(blow_up(d, i, 1), dihedral))
        layer = nxt
    return sorted(layer)


def enumerate_definite(n: int, dihedral: bool = True, limit: int = DEFAULT_LIMIT) -> EnumerationResult:
    """Positive-definite toric loops of length ``n`` (b2 = n - 2), one per conjugacy class.

    Every such loop reduces to the CP^2 triangle by removing positive ears, so the
    breadth-first closure of the triangle under positive blow-ups reaches all of them.
    Negative-definite loops are the mirrors and are not listed.
    """
    if n < 3:
        raise ValueError("definite loops need n >= 3")
    if n > limit:
        raise ValueError(f"n = {n} exceeds the enumeration limit {limit}")
    forms = _closure(n, dihedral)
    return EnumerationResult(n, dihedral, tuple(loop_from_canonical(f) for f in forms))


def count_definite(n: int, dihedral: bool = True, limit: int = DEFAULT_LIMIT) -> int:
    return enumerate_definite(n, dihedral, limit).count


def _triangulations(lo: int, hi: int, memo: dict) -> list[frozenset]:
    # triangulations of the polygon lo..hi as sets of chords (i, j), i < j
    key = (lo, hi)
    if key in memo:
        return memo[key]
    if hi - lo < 2:
        memo[key] = [frozenset()]
        return memo[key]
    out = []
    for k in range(lo + 1, hi):
        chords = set()
        if k - lo > 1:
            chords.add((lo, k))
        if hi - k > 1:
            chords.add((k, hi))
        for left in _triangulations(lo, k, memo):
            for right in _triangulations(k, hi, memo):
                out.append(frozenset(chords) | left | right)
    memo[key] = out
    return out


def triangulation_count(n: int, dihedral: bool = True) -> int:
    """Triangulations of a convex n-gon up to rotation (and reflection when ``dihedral``)."""
    if n < 3:
        raise ValueError("polygons need n >= 3")
    tris = _triangulations(0, n - 1, {})
    symmetries = [lambda v, r=r: (v + r) % n for r in range(n)]
    if dihedral:
        symmetries += [lambda v, r=r: (r - v) % n for r in range(n)]
    classes = set()
    for t in tris:
        images = []
        for g in symmetries:
            images.append(tuple(sorted(tuple(sorted((g(i), g(j)))) for i, j in t)))
        classes.add(min(images))
    return len(classes)
