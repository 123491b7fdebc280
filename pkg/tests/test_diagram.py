import random

import pytest
from hypothesis import given, settings

from conftest import CP2, CP2BAR, SIX_SECTIONS, big_loops, loop, matrices, seeds
from toricsect.diagram import (
    are_conjugate,
    canonical_form,
    conjugate,
    diagram_to_json,
    lift,
    mirror,
    normalize_start,
    parse_diagram,
    reverse,
    rotate,
    validate_loop,
    validate_path,
)
from toricsect.errors import AdjacencyViolation, DegenerateDiagram, SlopeParseError, TooShort
from toricsect.lattice import UnimodularMatrix, pairing


def test_valid_and_degenerate_loops():
    assert not loop(CP2).degenerate
    assert loop("1/0 1/0 1/0").degenerate


@pytest.mark.parametrize("text, position", [
    ("0/1 2/1 1/0", 1),
    ("0/1 1/0 2/1", 3),  # wraparound pair 2/1, 0/1
])
def test_adjacency_violation_position(text, position):
    with pytest.raises(AdjacencyViolation) as info:
        loop(text)
    assert info.value.position == position
    assert str(info.value) == f"adjacency violation at position {position}"


def test_empty_loop_is_too_short():
    with pytest.raises(TooShort):
        validate_loop([])


@pytest.mark.parametrize("text", ["0/1 1/0 3/1", "0/1 1/0 2/1 7/4", "0/1 1/0"])
def test_valid_paths(text):
    validate_path(text.split())


def test_path_errors():
    with pytest.raises(AdjacencyViolation):
        validate_path(["0/1", "0/1"])
    with pytest.raises(TooShort):
        validate_path(["0/1"])


@pytest.mark.parametrize("text, vectors, closed", [
    ("0/1 1/0 0/1 1/2", ((1, 0), (0, 1), (-1, 0), (-2, -1)), True),
    # S^4 is not almost complex, so the 2-loop lift cannot close up
    ("0/1 1/0", ((1, 0), (0, 1)), False),
    ("0/1 1/0 1/1", ((1, 0), (0, 1), (-1, -1)), True),
])
def test_lift_values(text, vectors, closed):
    lf = lift(loop(text))
    assert lf.vectors == vectors
    assert lf.closed is closed


def test_lift_open_for_four_cp2():
    assert lift(loop(SIX_SECTIONS[0])).closed is False


def test_lift_rejects_degenerate():
    with pytest.raises(DegenerateDiagram):
        lift(loop("1/0 1/0"))


@given(big_loops)
def test_lift_properties(d):
    lf = lift(d)
    v = lf.vectors
    assert all(pairing(v[i], v[i + 1]) == 1 for i in range(len(v) - 1))
    assert all(x in (s.rep, -s.rep) for x, s in zip(v, d.slopes))
    assert lf.closed == (pairing(v[-1], v[0]) == 1)


def test_symmetry_operations():
    d = loop(CP2)
    assert str(rotate(d, 1)) == "1/0 1/1 0/1"
    assert str(mirror(d)) == "0/1 1/0 -1/1"
    assert conjugate(d, UnimodularMatrix.identity()) == d
    assert reverse(reverse(d)) == d


def test_canonical_form_anchor():
    assert canonical_form(loop(CP2))[:2] == ((1, 0), (0, 1))


def test_known_six_sections_distinct():
    forms = {canonical_form(loop(t), dihedral=True) for t in SIX_SECTIONS}
    assert len(forms) == 3


@pytest.mark.parametrize("a, b, dihedral, expected", [
    (CP2, ("1/0", "1/1", "0/1"), False, True),
    (CP2, CP2BAR, False, False),
    (CP2, CP2BAR, True, False),
])
def test_are_conjugate(a, b, dihedral, expected):
    assert are_conjugate(loop(a), loop(b), dihedral) is expected


def test_even_hirzebruch_is_self_mirror():
    d = loop("0/1 1/0 0/1 1/2")
    assert are_conjugate(d, mirror(d))


@given(big_loops, seeds, matrices)
def test_canonical_form_is_class_invariant(d, r, A):
    e = conjugate(rotate(d, r), A)
    assert canonical_form(d) == canonical_form(e)
    assert canonical_form(d, True) == canonical_form(reverse(mirror(e)), True)


@given(big_loops)
def test_canonical_form_is_a_loop(d):
    form = canonical_form(d)
    assert validate_loop([tuple(v) for v in form])
    assert all(pairing(form[i], form[i + 1]) == 1 for i in range(len(form) - 1))


@pytest.mark.parametrize("text", ["0/1 1/0 1/1", "0/1 1/0 0/1 1/4"])
def test_normalize_start_fixed_points(text):
    assert normalize_start(loop(text)) == loop(text)


@given(big_loops)
@settings(max_examples=60)
def test_normalize_start_shape(d):
    e = normalize_start(d)
    assert str(e).split()[:2] == ["0/1", "1/0"]
    assert str(e).split()[2] in ("1/1", "-1/1", "0/1")
    assert are_conjugate(d, e)


def test_normalize_start_from_conjugate():
    e = normalize_start(loop("1/2 1/1 0/1"))
    assert str(e).split()[:2] == ["0/1", "1/0"]


def test_parse_diagram_json_round_trip():
    d = loop(SIX_SECTIONS[1])
    import json
    text = json.dumps(diagram_to_json(d))
    assert validate_loop(parse_diagram(text)) == d


@pytest.mark.parametrize("text", ['{"slopes": [[1, 0], [0, 0]]}', "{bad json", "1/0 x", '{"edges": []}', "[[1, 2, 3]]"])
def test_parse_diagram_errors(text):
    with pytest.raises(Exception) as info:
        parse_diagram(text)
    assert isinstance(info.value, ValueError)


def test_random_loops_are_valid():
    rng = random.Random(3)
    from toricsect.sampling import random_loop
    for _ in range(50):
        d = random_loop(rng)
        assert validate_loop(d.slopes) == d
