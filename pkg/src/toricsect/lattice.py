"""Integer algebra of primitive vectors in Z^2.

A slope ``b/a`` is the sign class of the primitive vector ``(a, b)``.  The
intersection pairing is ``<x, y> = x.a * y.b - x.b * y.a``; with this
convention the triple ``0/1 1/0 1/1`` is CP^2 (signature +1).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from operator import itemgetter
from typing import Union

from .errors import NonPrimitive, SlopeParseError


class PrimitiveVector(tuple):
    """An integer pair ``(a, b)`` with ``gcd(|a|, |b|) == 1``.

    Subclasses ``tuple`` so vectors compare lexicographically and hash cheaply.
    """

    __slots__ = ()

    def __new__(cls, a: int, b: int):
        a, b = int(a), int(b)
        if gcd(a, b) != 1:
            raise NonPrimitive(f"({a},{b}) is not primitive")
        return tuple.__new__(cls, (a, b))

    a = property(itemgetter(0))
    b = property(itemgetter(1))

    def __neg__(self) -> "PrimitiveVector":
        return tuple.__new__(PrimitiveVector, (-self[0], -self[1]))

    def __repr__(self) -> str:
        return f"PrimitiveVector({self[0]}, {self[1]})"


def _trusted(a: int, b: int) -> PrimitiveVector:
    # caller guarantees primitivity (e.g. image under a unimodular map)
    return tuple.__new__(PrimitiveVector, (a, b))


def canonical_rep(a: int, b: int) -> tuple[int, int]:
    if b < 0 or (b == 0 and a < 0):
        return -a, -b
    return a, b


@dataclass(frozen=True, order=True)
class Slope:
    """Sign class ``{v, -v}``; ``rep`` has ``b > 0``, or ``b == 0`` and ``a > 0``."""

    rep: PrimitiveVector

    def __post_init__(self):
        rep = self.rep
        if not isinstance(rep, PrimitiveVector):
            rep = PrimitiveVector(*rep)
        object.__setattr__(self, "rep", _trusted(*canonical_rep(rep[0], rep[1])))

    @classmethod
    def of(cls, a: int, b: int) -> "Slope":
        return cls(PrimitiveVector(a, b))

    def __str__(self) -> str:
        return format_slope(self)

    def __repr__(self) -> str:
        return f"Slope({format_slope(self)})"


SlopeLike = Union[Slope, PrimitiveVector, tuple, str]


def as_slope(x: SlopeLike) -> Slope:
    if isinstance(x, Slope):
        return x
    if isinstance(x, str):
        return parse_slope(x)
    a, b = x
    return Slope(PrimitiveVector(a, b))


@dataclass(frozen=True)
class UnimodularMatrix:
    m11: int
    m12: int
    m21: int
    m22: int

    def __post_init__(self):
        if self.m11 * self.m22 - self.m12 * self.m21 not in (1, -1):
            raise ValueError(f"matrix {self.rows} is not unimodular")

    @property
    def det_flag(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.m11, self.m12), (self.m21, self.m22)

    @classmethod
    def identity(cls) -> "UnimodularMatrix":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_columns(cls, u, v) -> "UnimodularMatrix":
        return cls(u[0], v[0], u[1], v[1])

    def inverse(self) -> "UnimodularMatrix":
        d = self.det_flag
        return UnimodularMatrix(d * self.m22, -d * self.m12, -d * self.m21, d * self.m11)

    def __matmul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        return UnimodularMatrix(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )


MIRROR = UnimodularMatrix(1, 0, 0, -1)


def pairing(x, y) -> int:
    """Algebraic intersection number ``x.a*y.b - x.b*y.a``."""
    return x[0] * y[1] - x[1] * y[0]


def _vec(x):
    return x.rep if isinstance(x, Slope) else x


def is_adjacent(x, y) -> bool:
    return abs(pairing(_vec(x), _vec(y))) == 1


def apply(A: UnimodularMatrix, v) -> PrimitiveVector:
    a, b = v
    return _trusted(A.m11 * a + A.m12 * b, A.m21 * a + A.m22 * b)


def apply_slope(A: UnimodularMatrix, s: Slope) -> Slope:
    return Slope(apply(A, s.rep))


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def dual_vector(v) -> PrimitiveVector:
    """Some ``w`` with ``pairing(v, w) == 1``."""
    a, b = v
    # a*y - b*x = 1
    g, s, t = extended_gcd(a, -b)
    if g != 1:
        raise NonPrimitive(f"({a},{b}) is not primitive")
    return _trusted(t, s)


def normalizing_matrix(v1, v2) -> UnimodularMatrix:
    """The det +1 matrix sending ``v1 -> (1,0)`` and ``v2 -> (0,1)``.

    Requires ``pairing(v1, v2) == 1``.
    """
    if pairing(v1, v2) != 1:
        raise ValueError("normalizing_matrix needs pairing(v1, v2) == 1")
    # inverse of the column matrix [v1 v2], which has determinant 1
    return UnimodularMatrix(v2[1], -v2[0], -v1[1], v1[0])


_SLOPE_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")


def parse_slope(s: str) -> Slope:
    m = _SLOPE_RE.match(s)
    if not m:
        raise SlopeParseError(f"malformed slope {s!r}")
    b, a = int(m.group(1)), int(m.group(2))
    if a == 0 and b == 0:
        raise SlopeParseError("0/0 is not a slope")
    if gcd(a, b) != 1:
        raise NonPrimitive(f"slope {s.strip()} is not in lowest terms")
    return Slope(_trusted(a, b))


def format_slope(v: Slope) -> str:
    # printed as a fraction with non-negative denominator
    a, b = v.rep
    if a < 0:
        a, b = -a, -b
    return f"{b}/{a}"
