import io
import json
import subprocess
import sys

import pytest

from toricsect.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue().strip(), err.getvalue().strip()


@pytest.mark.parametrize("argv, expected", [
    (("invariants", "0/1 1/0 1/1"),
     '{"n":3,"euler":3,"b2":1,"sigma":1,"b2_plus":1,"b2_minus":0,"spin":false,"almost_complex":true}'),
    (("classify", "0/1 1/0 0/1 1/2"), "#1 (S2xS2)"),
    (("classify", "0/1", "1/0", "-1/1"), "#1 CP2bar"),
    (("classify", "1/0 1/0 1/0"), "S1xS3"),
    (("validate", "0/1 1/0 1/1"), "valid loop of length 3"),
    (("form", "1/2 1/1 0/1"), "0/1 1/0 -1/1"),
    (("blowup", "-i", "1", "0/1 1/0"), "0/1 -1/1 1/0"),
    (("sum-s2s2", "-i", "1", "0/1 1/0"), "0/1 1/0 0/1 1/0"),
    (("repeat", "-r", "2", "0/1 1/0 1/1"), "0/1 1/0 1/1 0/1 1/0 1/1"),
    (("mirror", "0/1 1/0 1/1"), "0/1 1/0 -1/1"),
    (("canonical", "1/0 1/1 0/1"), "0/1 1/0 1/1"),
    (("conjugate", "--matrix", "0,-1,1,0", "0/1 1/0 1/1"), "1/0 0/1 -1/1"),
    (("plumbing", "0/1 1/0 3/1 5/2"), "euler: [3, 2]; boundary: L(5,2)"),
    (("plumbing", "0/1 1/0 0/1"), "euler: [0]; boundary: S1xS2"),
    (("curve", "-p", "7", "-q", "4"), "bridge_b: 19; genus: 18; chi: -34; homology: (7,4); pi1_order: 1"),
    (("cover", "-p", "4", "-q", "4", "-n", "2"), "genus: 11; family: E(2)"),
])
def test_goldens(argv, expected):
    code, out, err = call(*argv)
    assert (code, out) == (0, expected), err


def test_classify_trace():
    code, out, _ = call("classify", "--trace", "0/1 1/0 0/1 1/3")
    assert out.splitlines() == ["step 1: OddBacktrack at 1, sign none", "#1 CP2 # #1 CP2bar"]


def test_enumerate_output():
    code, out, _ = call("enumerate", "-n", "6")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "count: 3" and len(lines) == 4
    assert call("enumerate", "-n", "6", "--cyclic-only")[1].startswith("count: 4")


@pytest.mark.parametrize("argv, message", [
    (("validate", "0/1 2/1"), "adjacency violation at position 1"),
    (("validate", "0/1 1/0 2/1"), "adjacency violation at position 3"),
    (("validate", "2/4 1/0"), "slope 2/4 is not in lowest terms"),
    (("cover", "-p", "3", "-q", "4", "-n", "2"), "cover degree 2 must be >= 2 and divide gcd(3,4)"),
    (("blowup", "-i", "9", "0/1 1/0 1/1"), "position 9 not in 1..3"),
    (("invariants",), "no diagram given"),
])
def test_domain_errors(argv, message):
    assert call(*argv) == (1, "", message)


@pytest.mark.parametrize("argv", [(), ("bogus",), ("curve", "-p", "x", "-q", "2"), ("conjugate", "--matrix", "1,2", "0/1 1/0")])
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == 2


def test_json_round_trips(tmp_path):
    from toricsect.diagram import parse_diagram, validate_loop
    from toricsect.invariants import InvariantReport
    code, out, _ = call("blowup", "--json", "-i", "2", "0/1 1/0 1/1")
    d = validate_loop(parse_diagram(out))
    assert len(d) == 4
    code, out, _ = call("invariants", "0/1 1/0 0/1 1/2")
    assert InvariantReport.from_json(json.loads(out)).spin is True
    code, out, _ = call("classify", "--json", "0/1 1/0 1/1")
    assert json.loads(out)["cp2"] == 1


def test_input_file_and_svg(tmp_path):
    f = tmp_path / "d.json"
    f.write_text(json.dumps({"slopes": [[1, 0], [0, 1], [1, 1]]}))
    assert call("classify", "--in", str(f))[1] == "#1 CP2"
    svg = tmp_path / "loop.svg"
    assert call("validate", "--in", str(f), "--svg", str(svg))[0] == 0
    assert svg.read_text().count('class="vertex"') == 3


def test_curve_files(tmp_path):
    svg, js = tmp_path / "c.svg", tmp_path / "c.json"
    assert call("curve", "-p", "7", "-q", "4", "--svg", str(svg), "--json", str(js))[0] == 0
    data = json.loads(js.read_text())
    assert len(data["bridge_points"]) == 38 and len(data["arcs"]) == 76
    first = svg.read_bytes()
    call("curve", "-p", "7", "-q", "4", "--svg", str(svg))
    assert svg.read_bytes() == first
    assert call("curve", "-p", "1", "-q", "3", "--svg", str(svg))[0] == 1
    assert call("curve", "-p", "1", "-q", "3", "--svg", str(svg), "--allow-degenerate")[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "toricsect", "classify", "0/1 1/0 1/1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "#1 CP2"
    proc = subprocess.run([sys.executable, "-m", "toricsect", "validate", "0/1 2/1"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stderr.strip() == "adjacency violation at position 1"
