import pytest
from hypothesis import given
from hypothesis import strategies as st

from toricsect.errors import NonPrimitive, SlopeParseError
from toricsect.lattice import (
    PrimitiveVector,
    Slope,
    UnimodularMatrix,
    apply,
    as_slope,
    dual_vector,
    extended_gcd,
    format_slope,
    is_adjacent,
    normalizing_matrix,
    pairing,
    parse_slope,
)

coords = st.integers(min_value=-10**6, max_value=10**6)


@pytest.mark.parametrize("x, y, expected", [
    ((1, 0), (0, 1), 1),
    ((2, 1), (3, 2), 1),
    ((1, 0), (1, 5), 5),
])
def test_pairing_values(x, y, expected):
    assert pairing(PrimitiveVector(*x), PrimitiveVector(*y)) == expected


@pytest.mark.parametrize("x, y, expected", [
    ("0/1", "1/0", True),
    ("0/1", "2/1", False),
    ("1/1", "1/1", False),
])
def test_adjacency(x, y, expected):
    assert is_adjacent(parse_slope(x), parse_slope(y)) is expected


@pytest.mark.parametrize("A, v, expected", [
    (UnimodularMatrix.identity(), (3, 2), (3, 2)),
    (UnimodularMatrix(0, -1, 1, 0), (1, 0), (0, 1)),
    (UnimodularMatrix(1, 1, 0, 1), (0, 1), (1, 1)),
])
def test_apply(A, v, expected):
    assert apply(A, PrimitiveVector(*v)) == expected


@pytest.mark.parametrize("text, rep", [("0/1", (1, 0)), ("1/0", (0, 1)), ("-1/1", (-1, 1)), ("2/-3", (-3, 2))])
def test_parse_slope(text, rep):
    assert parse_slope(text).rep == rep


@pytest.mark.parametrize("text, exc", [("2/4", NonPrimitive), ("0/0", SlopeParseError), ("1/", SlopeParseError), ("abc", SlopeParseError)])
def test_parse_slope_errors(text, exc):
    with pytest.raises(exc):
        parse_slope(text)


def test_non_primitive_vector():
    with pytest.raises(NonPrimitive):
        PrimitiveVector(0, 0)
    with pytest.raises(NonPrimitive):
        PrimitiveVector(4, 6)


def test_unimodular_rejects_det_two():
    with pytest.raises(ValueError):
        UnimodularMatrix(2, 0, 0, 1)


@given(coords, coords)
def test_slope_text_round_trip(a, b):
    from math import gcd
    if gcd(a, b) != 1:
        return
    s = Slope.of(a, b)
    assert parse_slope(format_slope(s)) == s
    assert s == Slope.of(-a, -b)
    assert s.rep[1] > 0 or (s.rep[1] == 0 and s.rep[0] > 0)


@given(coords, coords)
def test_extended_gcd(a, b):
    g, x, y = extended_gcd(a, b)
    assert a * x + b * y == g >= 0


@given(coords, coords)
def test_dual_vector(a, b):
    from math import gcd
    if gcd(a, b) != 1:
        return
    v = PrimitiveVector(a, b)
    w = dual_vector(v)
    assert pairing(v, w) == 1
    A = normalizing_matrix(v, w)
    assert apply(A, v) == (1, 0) and apply(A, w) == (0, 1)


def test_matrix_group_laws():
    A = UnimodularMatrix(2, 1, 1, 1)
    assert A @ A.inverse() == UnimodularMatrix.identity()
    assert as_slope((3, 2)) == as_slope("2/3")
