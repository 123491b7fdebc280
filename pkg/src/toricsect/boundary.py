"""Toric multisections with boundary: linear plumbings and their boundary lens spaces."""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import ToricPath, lift
from .lattice import dual_vector, pairing

S3 = "S3"
S1XS2 = "S1xS2"
LENS = "Lens"


@dataclass(frozen=True)
class Plumbing:
    euler_numbers: tuple[int, ...]

    def __str__(self) -> str:
        return "[" + ", ".join(str(e) for e in self.euler_numbers) + "]"


@dataclass(frozen=True)
class Boundary3Manifold:
    variant: str
    p: int = 0
    q: int = 0
    raw_p: int = 0
    raw_q: int = 0

    def __str__(self) -> str:
        if self.variant == LENS:
            return f"L({self.p},{self.q})"
        return self.variant

    def to_json(self) -> dict:
        return {"variant": self.variant, "p": self.p, "q": self.q,
                "raw_p": self.raw_p, "raw_q": self.raw_q}


def normalize_lens_q(p: int, q: int) -> int:
    """Least representative of ``{+-q, +-q^-1} mod p`` (unoriented lens space type)."""
    q %= p
    qi = pow(q, -1, p)
    return min(q, p - q, qi, p - qi)


def lens_orbit(p: int, q: int) -> set[int]:
    """Brute-force orbit of ``q`` under ``q -> -q`` and ``q -> q^-1`` mod ``p``."""
    orbit = {q % p}
    frontier = [q % p]
    while frontier:
        x = frontier.pop()
        for y in ((-x) % p, next(t for t in range(1, p) if (t * x) % p == 1)):
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def _from_pq(p: int, q: int) -> Boundary3Manifold:
    p = abs(p)
    if p == 0:
        return Boundary3Manifold(S1XS2, 0, 0, 0, q)
    if p == 1:
        return Boundary3Manifold(S3, 1, 0, 1, q % 1)
    return Boundary3Manifold(LENS, p, normalize_lens_q(p, q), p, q % p)


def plumbing(path: ToricPath) -> Plumbing:
    """Euler numbers ``e_i = <v_{i+2}, v_i>`` of the linear plumbing (empty for length 2)."""
    v = lift(path).vectors
    return Plumbing(tuple(pairing(v[i + 2], v[i]) for i in range(len(v) - 2)))


def boundary(path: ToricPath) -> Boundary3Manifold:
    """Boundary from the genus-one splitting with meridians ``alpha_1`` and ``alpha_n``."""
    first = path.slopes[0].rep
    last = path.slopes[-1].rep
    p = pairing(first, last)
    delta = dual_vector(first)
    q = pairing(delta, last)
    if p < 0:
        p, q = -p, -q
    return _from_pq(p, q)


def cf_lens_oracle(euler_numbers) -> Boundary3Manifold:
    """Lens space with ``p/q = e_1 - 1/(e_2 - 1/(... - 1/e_k))`` in projective arithmetic."""
    num, den = 1, 0
    for e in reversed(list(euler_numbers)):
        num, den = e * num - den, num
    if num < 0:
        num, den = -num, -den
    return _from_pq(num, den)
