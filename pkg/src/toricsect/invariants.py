"""Numerical invariants of the 4-manifold behind a toric loop."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from .diagram import ToricLoop, _check_nondegenerate, lift
from .errors import TooShort
from .lattice import dual_vector, pairing


@dataclass(frozen=True)
class SymmetricIntegerMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(i)):
            raise ValueError("matrix must be symmetric")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def tridiagonal(cls, diagonal) -> "SymmetricIntegerMatrix":
        n = len(diagonal)
        return cls(tuple(
            tuple(diagonal[i] if i == j else (1 if abs(i - j) == 1 else 0) for j in range(n))
            for i in range(n)
        ))

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(self.size)]


@dataclass(frozen=True)
class InvariantReport:
    n: int
    euler: int
    b2: int
    sigma: int
    b2_plus: int
    b2_minus: int
    spin: bool
    almost_complex: bool

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "InvariantReport":
        return cls(**{k: data[k] for k in cls.__dataclass_fields__})


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _vec(x):
    return getattr(x, "rep", x)


def maslov_triple(L1, L2, L3) -> int:
    """Maslov index of three lines in R^2 via the sign of the cyclic pairing product."""
    v1, v2, v3 = _vec(L1), _vec(L2), _vec(L3)
    return _sign(pairing(v1, v2) * pairing(v2, v3) * pairing(v3, v1))


def maslov_theta_signature(L1, L2, L3) -> int:
    """Signature of Wall's symmetric form on ``L1 + L2 + L3`` (one basis vector each)."""
    v = (_vec(L1), _vec(L2), _vec(L3))
    # upper triangle (-1)^(i+j) w(v_i, v_j), mirrored below the diagonal
    sym = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            sym[i][j] = sym[j][i] = (-1) ** (i + j) * pairing(v[i], v[j])
    return matrix_signature(SymmetricIntegerMatrix(tuple(tuple(r) for r in sym)))


def matrix_signature(Q) -> int:
    """Signature by exact symmetric congruence diagonalization over the rationals."""
    rows = Q.entries if isinstance(Q, SymmetricIntegerMatrix) else Q
    M = [[Fraction(x) for x in row] for row in rows]
    n = len(M)
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if M[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if M[i][j] != 0), None)
            if off is None:
                break
            i, j = off
            # row/col i += row/col j makes the (i,i) entry 2*M[i][j] != 0
            for c in range(n):
                M[i][c] += M[j][c]
            for r in range(n):
                M[r][i] += M[r][j]
            piv = i
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            for row in M:
                row[k], row[piv] = row[piv], row[k]
        p = M[k][k]
        for i in range(k + 1, n):
            f = M[i][k] / p
            if f:
                for c in range(k, n):
                    M[i][c] -= f * M[k][c]
                for r in range(k, n):
                    M[r][i] -= f * M[r][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        k += 1
    return pos - neg


def signature(d: ToricLoop) -> int:
    """Sum of Maslov indices ``mu(alpha_1, alpha_i, alpha_{i+1})`` for i = 2..n-1."""
    if d.degenerate:
        return 0
    s = d.slopes
    return sum(maslov_triple(s[0], s[i], s[i + 1]) for i in range(1, len(s) - 1))


def signature_slope_ratio(d: ToricLoop) -> int:
    """Signature by comparing the ratios ``a_i / b_i`` after moving alpha_1 to (1, 0)."""
    if d.degenerate:
        return 0
    v1 = d.slopes[0].rep
    w = dual_vector(v1)
    # inverse of [v1 w] sends v1 -> (1,0)
    m11, m12, m21, m22 = w[1], -w[0], -v1[1], v1[0]
    vs = [(m11 * a + m12 * b, m21 * a + m22 * b) for a, b in (s.rep for s in d.slopes)]
    k_plus = k_minus = 0
    for (a1, b1), (a2, b2) in zip(vs[1:], vs[2:]):
        if b1 == 0 or b2 == 0:
            continue
        # a1/b1 < a2/b2  <=>  (a1*b2 - a2*b1) * (b1*b2) < 0
        c = (a1 * b2 - a2 * b1) * (b1 * b2)
        if c < 0:
            k_plus += 1
        elif c > 0:
            k_minus += 1
    return k_plus - k_minus


def intersection_form(d: ToricLoop) -> SymmetricIntegerMatrix:
    """Tridiagonal form with self-intersections ``e_i = <v_{i+2}, v_i>`` on the oriented lift."""
    _check_nondegenerate(d)
    if len(d) < 3:
        raise TooShort("intersection form needs n >= 3")
    v = lift(d).vectors
    return SymmetricIntegerMatrix.tridiagonal([pairing(v[i + 2], v[i]) for i in range(len(v) - 2)])


def is_spin(d: ToricLoop) -> bool:
    if d.degenerate:
        return True
    if len(d) < 2:
        raise TooShort("spin criterion needs n >= 2")
    v = lift(d).vectors
    u1, u2 = v[0], v[1]
    # coordinates in the basis (v1, v2); pairing(v1, v2) == 1
    for x in v[2:]:
        a = pairing(x, u2)
        b = pairing(u1, x)
        if (a * b) % 2:
            return False
    return True


def admits_almost_complex(d: ToricLoop) -> bool:
    _check_nondegenerate(d)
    return lift(d).closed


def report(d: ToricLoop) -> InvariantReport:
    n = len(d)
    if d.degenerate:
        # S^1 x S^3: a Hopf surface, hence almost complex
        return InvariantReport(n, 0, 0, 0, 0, 0, True, True)
    b2 = n - 2
    sigma = signature(d)
    return InvariantReport(
        n=n,
        euler=n,
        b2=b2,
        sigma=sigma,
        b2_plus=(b2 + sigma) // 2,
        b2_minus=(b2 - sigma) // 2,
        spin=is_spin(d),
        almost_complex=admits_almost_complex(d),
    )
