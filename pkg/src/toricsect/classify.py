"""Connected-sum classification of toric loops and the surgeries that build them."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .diagram import ToricLoop, _check_nondegenerate, local_lift
from .errors import IndexOutOfRange, NoReduction
from .lattice import Slope, _trusted, is_adjacent, pairing

S4 = "S4"
S1XS3 = "S1xS3"
SUM = "Sum"


@dataclass(frozen=True)
class ConnSumType:
    """``#cp2 CP^2 # #cp2bar CP^2-bar # #s2s2 (S^2 x S^2)``, or S^4 / S^1 x S^3."""

    variant: str
    cp2: int = 0
    cp2bar: int = 0
    s2s2: int = 0

    @classmethod
    def of(cls, cp2: int = 0, cp2bar: int = 0, s2s2: int = 0) -> "ConnSumType":
        """Normalized standard form of the raw tally ``(cp2, cp2bar, s2s2)``."""
        if min(cp2, cp2bar, s2s2) < 0:
            raise ValueError("summand counts must be non-negative")
        if cp2 == cp2bar == s2s2 == 0:
            return cls(S4)
        if cp2 == cp2bar == 0:
            return cls(SUM, 0, 0, s2s2)
        # CP2 # S2xS2 = 2 CP2 # CP2bar  and  CP2bar # S2xS2 = CP2 # 2 CP2bar
        return cls(SUM, cp2 + s2s2, cp2bar + s2s2, 0)

    @classmethod
    def from_invariants(cls, b2: int, sigma: int, spin: bool) -> "ConnSumType":
        if (b2 + sigma) % 2 or abs(sigma) > b2:
            raise ValueError(f"no toric manifold has b2={b2}, sigma={sigma}")
        if spin:
            if sigma:
                raise ValueError("a spin connected sum of CP2, CP2bar, S2xS2 has signature 0")
            return cls.of(s2s2=b2 // 2)
        if b2 == 0:
            raise ValueError("b2 = 0 forces S^4, which is spin")
        return cls.of((b2 + sigma) // 2, (b2 - sigma) // 2)

    @property
    def b2(self) -> int:
        return self.cp2 + self.cp2bar + 2 * self.s2s2

    @property
    def sigma(self) -> int:
        return self.cp2 - self.cp2bar

    @property
    def spin(self) -> bool:
        return self.cp2 == 0 and self.cp2bar == 0

    def plus(self, cp2: int = 0, cp2bar: int = 0, s2s2: int = 0) -> "ConnSumType":
        if self.variant == S1XS3:
            raise ValueError("S1xS3 is not a sum of simply-connected pieces")
        return ConnSumType.of(self.cp2 + cp2, self.cp2bar + cp2bar, self.s2s2 + s2s2)

    def mirrored(self) -> "ConnSumType":
        return ConnSumType(self.variant, self.cp2bar, self.cp2, self.s2s2)

    def __str__(self) -> str:
        if self.variant != SUM:
            return self.variant
        parts = []
        if self.cp2:
            parts.append(f"#{self.cp2} CP2")
        if self.cp2bar:
            parts.append(f"#{self.cp2bar} CP2bar")
        if self.s2s2:
            parts.append(f"#{self.s2s2} (S2xS2)")
        return " # ".join(parts)

    def to_json(self) -> dict:
        return {"variant": self.variant, "cp2": self.cp2, "cp2bar": self.cp2bar, "s2s2": self.s2s2}


BACKTRACK = "Backtrack"
ODD_BACKTRACK = "OddBacktrack"
TRIANGLE = "Triangle"


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    position: int
    sign: Optional[int] = None

    def describe(self, k: int) -> str:
        sign = "none" if self.sign is None else f"{self.sign:+d}"
        return f"step {k}: {self.kind} at {self.position}, sign {sign}"


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)
    raw_tallies: tuple[int, int, int] = (0, 0, 0)

    def lines(self) -> list[str]:
        return [s.describe(k) for k, s in enumerate(self.steps, 1)]


def _find_move(slopes: list, policy: str):
    n = len(slopes)
    order = range(n) if policy == "left" else range(n - 1, -1, -1)
    for i in order:
        if slopes[i] == slopes[(i + 2) % n]:
            return BACKTRACK, i
    for i in order:
        if is_adjacent(slopes[i], slopes[(i + 2) % n]):
            return TRIANGLE, i
    raise NoReduction(f"no reducible position in loop of length {n}")


def classify(d: ToricLoop, policy: str = "left") -> tuple[ConnSumType, ReductionTrace]:
    """Reduce ``d`` to a 2-loop by removing ears and backtracks.

    An ear ``(x, y, z)`` with ``x, z`` adjacent splits off CP^2 or CP^2-bar by
    the sign of ``<z, x>`` on the oriented lift.  A backtrack ``(x, y, x, z)``
    splits off the plumbing of a 0-sphere and an e-sphere, ``e = <z, y>``:
    S^2 x S^2 for even e, CP^2 # CP^2-bar for odd e.  ``policy`` picks the
    leftmost (``"left"``) or rightmost (``"right"``) reducible position.
    """
    trace = ReductionTrace()
    if d.degenerate:
        return ConnSumType(S1XS3), trace
    if policy not in ("left", "right"):
        raise ValueError(f"unknown scan policy {policy!r}")
    slopes = list(d.slopes)
    a = b = c = 0
    while len(slopes) > 2:
        n = len(slopes)
        kind, i = _find_move(slopes, policy)
        if n == 3 and kind == BACKTRACK:  # pragma: no cover - x,y,x cannot close up
            raise NoReduction("backtrack in a 3-loop")
        idx = [(i + k) % n for k in range(4)]
        v = local_lift([slopes[j].rep for j in idx])
        if kind == BACKTRACK:
            e = pairing(v[3], v[1])
            if e % 2:
                a += 1
                b += 1
                kind = ODD_BACKTRACK
            else:
                c += 1
            drop = {idx[1], idx[2]}
            sign = None
        else:
            e = pairing(v[2], v[0])
            if e == 1:
                a += 1
            elif e == -1:
                b += 1
            else:  # pragma: no cover
                raise NoReduction(f"ear with self-intersection {e}")
            drop = {idx[1]}
            sign = e
        trace.steps.append(ReductionStep(kind, i + 1, sign))
        slopes = [s for j, s in enumerate(slopes) if j not in drop]
    if a + b + 2 * c != len(d) - 2:  # pragma: no cover
        raise NoReduction("tally does not account for b2")
    trace.raw_tallies = (a, b, c)
    return ConnSumType.of(a, b, c), trace


def _position(d: ToricLoop, position: int) -> int:
    _check_nondegenerate(d)
    n = len(d)
    if not 1 <= position <= n:
        raise IndexOutOfRange(f"position {position} not in 1..{n}")
    return position - 1


def blow_up(d: ToricLoop, position: int, sign: int) -> ToricLoop:
    """Insert a slope between ``alpha_i`` and ``alpha_{i+1}`` (cyclically).

    ``sign=+1`` sums with CP^2, ``sign=-1`` with CP^2-bar.  On a lift with
    ``<v_i, v_{i+1}> = 1`` the sum ``v_i + v_{i+1}`` adds CP^2-bar and the
    difference ``v_i - v_{i+1}`` adds CP^2.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    i = _position(d, position)
    n = len(d)
    u = d.slopes[i].rep
    w = d.slopes[(i + 1) % n].rep
    if pairing(u, w) == -1:
        w = -w
    new = Slope(_trusted(u[0] - sign * w[0], u[1] - sign * w[1]))
    return ToricLoop(d.slopes[: i + 1] + (new,) + d.slopes[i + 1:])


def sum_s2s2(d: ToricLoop, position: int) -> ToricLoop:
    """Replace ``(alpha_i, alpha_{i+1})`` by ``(alpha_i, alpha_{i+1}, alpha_i, alpha_{i+1})``."""
    i = _position(d, position)
    n = len(d)
    x, y = d.slopes[i], d.slopes[(i + 1) % n]
    return ToricLoop(d.slopes[: i + 1] + (y, x) + d.slopes[i + 1:])


def insert_backtrack(d: ToricLoop, position: int, twist: int) -> ToricLoop:
    """Insert ``(y, alpha_i)`` after ``alpha_i`` where ``y = w + twist * v_i``.

    Here ``w`` is the lifted successor of ``alpha_i``; ``twist = 0`` is
    :func:`sum_s2s2`.  The split-off piece is S^2 x S^2 for even twist and
    CP^2 # CP^2-bar for odd twist.
    """
    i = _position(d, position)
    n = len(d)
    u = d.slopes[i].rep
    w = d.slopes[(i + 1) % n].rep
    if pairing(u, w) == -1:
        w = -w
    y = Slope(_trusted(w[0] + twist * u[0], w[1] + twist * u[1]))
    return ToricLoop(d.slopes[: i + 1] + (y, d.slopes[i]) + d.slopes[i + 1:])


def central_cover(d: ToricLoop, r: int) -> ToricLoop:
    """Diagram of the r-fold cyclic cover branched over the central torus."""
    if r < 1:
        raise ValueError("cover degree must be positive")
    return ToricLoop(d.slopes * r, d.degenerate)


def xtn_expected(b2_X: int, sigma_X: int, spin_X: bool, g: int, r: int) -> ConnSumType:
    """Standard form of ``(#^r X) # (#^{g(r-1)} S^2 x S^2)`` from invariant arithmetic."""
    if r < 1 or g < 0:
        raise ValueError("need r >= 1 and g >= 0")
    b2 = r * b2_X + 2 * g * (r - 1)
    sigma = r * sigma_X
    if b2 == 0:
        return ConnSumType(S4)
    return ConnSumType.from_invariants(b2, sigma, spin_X)
