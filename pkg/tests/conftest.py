import random

import pytest
from hypothesis import strategies as st

from toricsect.diagram import validate_loop
from toricsect.sampling import random_loop, random_path, random_unimodular

CP2 = ("0/1", "1/0", "1/1")
CP2BAR = ("0/1", "1/0", "-1/1")
SIX_SECTIONS = (
    ("0/1", "1/0", "1/1", "1/2", "1/3", "1/4"),
    ("0/1", "1/0", "1/1", "2/3", "1/2", "1/3"),
    ("0/1", "1/0", "1/1", "2/3", "3/5", "1/2"),
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)
loops = seeds.map(lambda s: random_loop(random.Random(s)))
big_loops = loops.filter(lambda d: len(d) >= 3)
paths = seeds.map(lambda s: random_path(random.Random(s)))
matrices = seeds.map(lambda s: random_unimodular(random.Random(s), 6))


def loop(text):
    return validate_loop(text.split() if isinstance(text, str) else text)


@pytest.fixture(scope="session")
def random_suite():
    """The fixed suite of 1000 loops with n >= 3 shared by the cross-check tests."""
    rng = random.Random(20240501)
    suite = []
    while len(suite) < 1000:
        d = random_loop(rng)
        if len(d) >= 3:
            suite.append(d)
    return suite
