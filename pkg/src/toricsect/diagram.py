"""Toric multisection diagrams: loops and paths of slopes in the Farey graph.

Positions are 1-based throughout the public API, matching the indexing of
diagram slopes ``alpha_1 .. alpha_n``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import AdjacencyViolation, DegenerateDiagram, SlopeParseError, TooShort
from .lattice import (
    MIRROR,
    PrimitiveVector,
    Slope,
    SlopeLike,
    UnimodularMatrix,
    _trusted,
    apply_slope,
    as_slope,
    format_slope,
    is_adjacent,
    normalizing_matrix,
    pairing,
)


@dataclass(frozen=True)
class ToricLoop:
    slopes: tuple[Slope, ...]
    degenerate: bool = False

    def __len__(self) -> int:
        return len(self.slopes)

    def __str__(self) -> str:
        return " ".join(format_slope(s) for s in self.slopes)

    @property
    def reps(self) -> list[tuple[int, int]]:
        return [tuple(s.rep) for s in self.slopes]


@dataclass(frozen=True)
class ToricPath:
    slopes: tuple[Slope, ...]

    def __len__(self) -> int:
        return len(self.slopes)

    def __str__(self) -> str:
        return " ".join(format_slope(s) for s in self.slopes)


@dataclass(frozen=True)
class OrientedLift:
    vectors: tuple[PrimitiveVector, ...]
    closed: bool


def _slopes(seq: Iterable[SlopeLike]) -> tuple[Slope, ...]:
    return tuple(as_slope(s) for s in seq)


def validate_loop(slopes: Iterable[SlopeLike]) -> ToricLoop:
    s = _slopes(slopes)
    if not s:
        raise TooShort("a loop needs at least one slope")
    if all(x == s[0] for x in s):
        return ToricLoop(s, degenerate=True)
    n = len(s)
    for i in range(n):
        if not is_adjacent(s[i], s[(i + 1) % n]):
            raise AdjacencyViolation(i + 1)
    return ToricLoop(s)


def validate_path(slopes: Iterable[SlopeLike]) -> ToricPath:
    s = _slopes(slopes)
    if len(s) < 2:
        raise TooShort("a path needs at least two slopes")
    for i in range(len(s) - 1):
        if not is_adjacent(s[i], s[i + 1]):
            raise AdjacencyViolation(i + 1)
    return ToricPath(s)


def _check_nondegenerate(d) -> None:
    if isinstance(d, ToricLoop) and d.degenerate:
        raise DegenerateDiagram("diagram has all slopes equal")


def lift(d) -> OrientedLift:
    """Sign choices making every consecutive pairing +1, starting at ``rep(slopes[0])``."""
    _check_nondegenerate(d)
    vs = [d.slopes[0].rep]
    for s in d.slopes[1:]:
        v = s.rep
        p = pairing(vs[-1], v)
        if p == -1:
            v = -v
        elif p != 1:
            raise AdjacencyViolation(len(vs))
        vs.append(v)
    return OrientedLift(tuple(vs), pairing(vs[-1], vs[0]) == 1)


def local_lift(vectors: Sequence) -> list[PrimitiveVector]:
    """Oriented lift of an explicit vector sequence (first vector kept as given)."""
    out = [vectors[0]]
    for v in vectors[1:]:
        out.append(v if pairing(out[-1], v) == 1 else -v)
    return out


def rotate(d: ToricLoop, r: int) -> ToricLoop:
    n = len(d.slopes)
    r %= n
    return ToricLoop(d.slopes[r:] + d.slopes[:r], d.degenerate)


def reverse(d: ToricLoop) -> ToricLoop:
    return ToricLoop(d.slopes[::-1], d.degenerate)


def conjugate(d, A: UnimodularMatrix):
    slopes = tuple(apply_slope(A, s) for s in d.slopes)
    if isinstance(d, ToricPath):
        return ToricPath(slopes)
    return ToricLoop(slopes, d.degenerate)


def mirror(d):
    return conjugate(d, MIRROR)


def canonical_form(d: ToricLoop, dihedral: bool = False, backend: str | None = None):
    """Conjugacy-class invariant as a tuple of integer pairs.

    Over every rotation (and, with ``dihedral``, every reflection of the
    polygon, i.e. reversal combined with an orientation-reversing change of
    basis), lift, normalize the first two vectors to ``(1,0), (0,1)`` and keep
    the lexicographically least sequence.
    """
    _check_nondegenerate(d)
    key = kernels.canonical_key(d.reps, dihedral, backend)
    pairs = [(1, 0), (0, 1)]
    pairs.extend(zip(key[0::2], key[1::2]))
    return tuple(pairs)


def loop_from_canonical(form) -> ToricLoop:
    return ToricLoop(tuple(Slope(_trusted(a, b)) for a, b in form))


def are_conjugate(d1: ToricLoop, d2: ToricLoop, dihedral: bool = False) -> bool:
    if len(d1) != len(d2):
        _check_nondegenerate(d1)
        _check_nondegenerate(d2)
        return False
    return canonical_form(d1, dihedral) == canonical_form(d2, dihedral)


def normalize_start(d: ToricLoop) -> ToricLoop:
    """Conjugate ``d`` so it starts ``0/1, 1/0`` followed by ``1/1``, ``-1/1`` or ``0/1``."""
    _check_nondegenerate(d)
    n = len(d)
    if n < 3:
        raise TooShort("normal form needs at least three slopes")
    s = d.slopes
    for r in range(n):
        first, third = s[r], s[(r + 2) % n]
        if first == third or is_adjacent(first, third):
            break
    else:  # pragma: no cover - every valid loop has a backtrack or an ear
        raise AssertionError("no triangle or backtrack in a valid loop")
    rot = rotate(d, r)
    lifted = lift(rot)
    A = normalizing_matrix(lifted.vectors[0], lifted.vectors[1])
    return conjugate(rot, A)


def parse_diagram(text: str) -> list[Slope]:
    """Accept ``"0/1 1/0 1/1"`` or the JSON form ``{"slopes": [[a, b], ...]}``."""
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise SlopeParseError(f"bad diagram JSON: {exc.msg}") from None
        try:
            pairs = data["slopes"] if isinstance(data, dict) else data
            return [as_slope(tuple(p)) for p in pairs]
        except (KeyError, TypeError):
            raise SlopeParseError('diagram JSON must look like {"slopes": [[a, b], ...]}') from None
    return [as_slope(tok) for tok in stripped.split()]


def diagram_to_json(d) -> dict:
    return {"slopes": [list(s.rep) for s in d.slopes]}
