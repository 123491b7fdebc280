"""Random valid toric loops built by surgeries and changes of basis."""
from __future__ import annotations

import random
from typing import Optional

from .classify import blow_up, insert_backtrack, sum_s2s2
from .diagram import ToricLoop, conjugate, rotate, validate_loop
from .lattice import UnimodularMatrix

_GENERATORS = (
    UnimodularMatrix(1, 1, 0, 1),
    UnimodularMatrix(1, -1, 0, 1),
    UnimodularMatrix(1, 0, 1, 1),
    UnimodularMatrix(1, 0, -1, 1),
    UnimodularMatrix(0, -1, 1, 0),
)

SEEDS = (("0/1", "1/0"), ("0/1", "1/0", "1/1"), ("0/1", "1/0", "-1/1"))


def random_unimodular(rng: random.Random, length: int = 4) -> UnimodularMatrix:
    A = UnimodularMatrix.identity()
    for _ in range(length):
        A = A @ rng.choice(_GENERATORS)
    return A


def random_loop(rng: Optional[random.Random] = None, max_n: int = 12, conjugations: int = 4) -> ToricLoop:
    """A loop of length at most ``max_n`` from random blow-ups, S^2 x S^2 insertions and twists."""
    rng = rng or random.Random()
    d = validate_loop(rng.choice(SEEDS))
    target = rng.randint(len(d), max_n)
    while len(d) < target:
        pos = rng.randint(1, len(d))
        room = target - len(d)
        move = rng.random()
        if room >= 2 and move < 0.2:
            d = sum_s2s2(d, pos)
        elif room >= 2 and move < 0.35:
            d = insert_backtrack(d, pos, rng.randint(-3, 3))
        else:
            d = blow_up(d, pos, rng.choice((1, -1)))
        if rng.random() < 0.3:
            d = rotate(d, rng.randrange(len(d)))
    return conjugate(d, random_unimodular(rng, conjugations))


def random_path(rng: Optional[random.Random] = None, max_n: int = 10, bound: int = 50) -> list:
    """A Farey path with entries bounded by ``bound`` (as primitive integer pairs)."""
    rng = rng or random.Random()
    n = rng.randint(2, max_n)
    while True:
        A = random_unimodular(rng, rng.randint(0, 6))
        path = [(A.m11, A.m21), (A.m12, A.m22)]
        while len(path) < n:
            u, w = path[-2], path[-1]
            k = rng.randint(-3, 3)
            # any k*w - u is adjacent to w; k = 0 backtracks to -u
            path.append((k * w[0] - u[0], k * w[1] - u[1]))
        if all(abs(c) <= bound for v in path for c in v):
            return path
