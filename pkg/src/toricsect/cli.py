"""Command-line interface: ``toricsect <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (one-line diagnostic on
stderr) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import curves, diagram as dg, enumeration, svg
from .boundary import boundary, plumbing
from .classify import blow_up, central_cover, classify, sum_s2s2
from .invariants import report
from .errors import TooShort
from .lattice import UnimodularMatrix

_NEG_SLOPE = re.compile(r"^-\d+\s*/")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_slopes(args):
    if args.infile:
        text = Path(args.infile).read_text()
    elif args.diagram:
        text = " ".join(args.diagram)
    else:
        raise TooShort("no diagram given")
    return dg.parse_diagram(text)


def _loop(args) -> dg.ToricLoop:
    return dg.validate_loop(_read_slopes(args))


def _emit_loop(d, args) -> str:
    return _dump(dg.diagram_to_json(d)) if args.json else str(d)


def _cmd_validate(args):
    d = _loop(args)
    if args.svg:
        Path(args.svg).write_text(svg.emit_farey_svg(d))
    kind = "degenerate loop" if d.degenerate else "loop"
    return _dump({"valid": True, "n": len(d), "degenerate": d.degenerate}) if args.json \
        else f"valid {kind} of length {len(d)}"


def _cmd_invariants(args):
    return _dump(report(_loop(args)).to_json())


def _cmd_classify(args):
    kind, trace = classify(_loop(args), policy=args.policy)
    if args.json:
        out = kind.to_json()
        out["steps"] = trace.lines()
        return _dump(out)
    lines = trace.lines() if args.trace else []
    return "\n".join(lines + [str(kind)])


def _cmd_form(args):
    return _emit_loop(dg.normalize_start(_loop(args)), args)


def _cmd_blowup(args):
    return _emit_loop(blow_up(_loop(args), args.position, args.sign), args)


def _cmd_sum_s2s2(args):
    return _emit_loop(sum_s2s2(_loop(args), args.position), args)


def _cmd_repeat(args):
    return _emit_loop(central_cover(_loop(args), args.r), args)


def _cmd_mirror(args):
    return _emit_loop(dg.mirror(_loop(args)), args)


def _cmd_canonical(args):
    form = dg.canonical_form(_loop(args), dihedral=args.dihedral)
    if args.json:
        return _dump({"canonical": [list(v) for v in form]})
    return str(dg.loop_from_canonical(form))


def _cmd_conjugate(args):
    try:
        entries = [int(x) for x in args.matrix.split(",")]
        A = UnimodularMatrix(*entries)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad --matrix {args.matrix!r}: {exc}") from None
    return _emit_loop(dg.conjugate(_loop(args), A), args)


def _cmd_plumbing(args):
    path = dg.validate_path(_read_slopes(args))
    plumb = plumbing(path)
    bdry = boundary(path)
    if args.json:
        return _dump({"euler": list(plumb.euler_numbers), "boundary": bdry.to_json()})
    return f"euler: {plumb}; boundary: {bdry}"


def _cmd_enumerate(args):
    res = enumeration.enumerate_definite(args.n, dihedral=not args.cyclic_only)
    if args.json:
        return _dump({"n": res.n, "dihedral": res.dihedral, "count": res.count,
                      "loops": [dg.diagram_to_json(d)["slopes"] for d in res.loops]})
    return "\n".join([f"count: {res.count}"] + [str(d) for d in res.loops])


def _cmd_curve(args):
    params = curves.curve_params(args.p, args.q)
    if args.svg or args.json:
        shadow = curves.shadow_diagram(args.p, args.q, allow_degenerate=args.allow_degenerate)
        if args.svg:
            Path(args.svg).write_text(svg.emit_shadow_svg(shadow))
        if args.json:
            Path(args.json).write_text(_dump(shadow.to_json()) + "\n")
    return (f"bridge_b: {params.bridge_b}; genus: {params.genus}; chi: {params.chi}; "
            f"homology: ({args.p},{args.q}); pi1_order: {params.pi1_order}")


def _cmd_cover(args):
    cov = curves.cyclic_cover_genus(args.p, args.q, args.n)
    family = cov.family or "unnamed"
    return f"genus: {cov.genus}; family: {family}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricsect", description="Toric multisection diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    def diagram_cmd(name, func, help_text, json_flag=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("diagram", nargs="*", help='slopes such as "0/1 1/0 1/1"')
        p.add_argument("--in", dest="infile", metavar="FILE", help='JSON file {"slopes": [[a, b], ...]}')
        if json_flag:
            p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = diagram_cmd("validate", _cmd_validate, "check Farey adjacency of a loop")
    p.add_argument("--svg", metavar="FILE", help="write the loop drawn in the Farey disk")
    diagram_cmd("invariants", _cmd_invariants, "euler, b2, signature, spin, almost complex", False)
    p = diagram_cmd("classify", _cmd_classify, "connected-sum type by ear/backtrack reduction")
    p.add_argument("--trace", action="store_true", help="print the reduction steps")
    p.add_argument("--policy", choices=["left", "right"], default="left")
    diagram_cmd("form", _cmd_form, "conjugate to start 0/1 1/0 followed by an ear or backtrack")
    p = diagram_cmd("blowup", _cmd_blowup, "insert a slope (connected sum with CP2 or CP2bar)")
    p.add_argument("-i", "--position", type=int, required=True, help="1-based insertion position")
    p.add_argument("--sign", type=int, choices=[1, -1], default=1)
    p = diagram_cmd("sum-s2s2", _cmd_sum_s2s2, "connected sum with S2xS2")
    p.add_argument("-i", "--position", type=int, required=True)
    p = diagram_cmd("repeat", _cmd_repeat, "cyclic cover branched along the central torus")
    p.add_argument("-r", type=int, required=True)
    diagram_cmd("mirror", _cmd_mirror, "orientation-reversed diagram")
    p = diagram_cmd("canonical", _cmd_canonical, "canonical representative up to conjugation")
    p.add_argument("--dihedral", action="store_true", help="also identify reflections")
    p = diagram_cmd("conjugate", _cmd_conjugate, "apply a unimodular change of basis")
    p.add_argument("--matrix", required=True, metavar="A,B,C,D", help="rows (A B; C D)")
    diagram_cmd("plumbing", _cmd_plumbing, "plumbing and boundary of a path diagram")

    p = sub.add_parser("enumerate", help="definite loops of length n up to conjugation")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--cyclic-only", action="store_true", help="do not identify reflections")
    p.add_argument("--dihedral", action="store_true", help="identify reflections (default)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("curve", help="bridge data and shadow diagram of the (p,q) curve")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--svg", metavar="FILE")
    p.add_argument("--json", metavar="FILE")
    p.add_argument("--allow-degenerate", action="store_true")
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("cover", help="genus of the cyclic branched cover multisection")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_cover)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # a leading space keeps argparse from reading "-1/1" as an option
    argv = [" " + a if _NEG_SLOPE.match(a) else a for a in argv]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except argparse.ArgumentTypeError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except (ValueError, OSError) as exc:
        # ToricError is a ValueError
        print(str(exc), file=stderr)
        return 1
    print(out, file=stdout)
    return 0


def main() -> None:
    sys.exit(run())
