"""Command-line entry point: ``lgmirror {mirror,res,ext,theta,verify}``.

Exit status: 0 when every check passes, 1 when a mathematical check
fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import homology as hl
from . import mirror as mr
from .fields import field_from_spec
from .poly import format_poly
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _field(text: str):
    try:
        return field_from_spec(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lgmirror", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="structured output")
        p.add_argument("--field", type=_field, default=None, metavar="{q,zp:<prime>}")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--degree-bound", type=int, default=None, dest="degree_bound")
        return p

    p = common(sub.add_parser("mirror", help="mirror equation, potential and pencil"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t1", type=_fraction, default=None)
    p.add_argument("--t2", type=_fraction, default=None)

    p = common(sub.add_parser("res", help="periodic resolution of S/(z_i) over k[z]/(z1...zn)"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--len", type=int, default=5, dest="length")

    p = common(sub.add_parser("ext", help="Ext^k(J_i, J_j) table"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--k", type=int, default=4, help="largest k")

    common(sub.add_parser("theta", help="theta elimination and the rank-one surface"))

    p = common(sub.add_parser("verify", help="run a verification suite"))
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n", type=int, default=None)
    return parser


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_mirror(args) -> int:
    if args.n < 2:
        raise UsageError("mirror needs --n >= 2; the rank-one mirror is produced by `theta`")
    M = mr.mirror_equation(args.n, args.t1, args.t2)
    payload = M.to_json()
    text = "\n".join([
        f"mirror of LG({args.n + 1}) in {', '.join(M.ring.names)}",
        f"equation:  {M.equation_text()}",
        f"potential: ({format_poly(M.potential_num)}) / ({format_poly(M.potential_den)})",
        f"pencil f:  {format_poly(M.pencil_f)}",
        f"pencil g:  {format_poly(M.pencil_g)}",
        "indeterminacy: (" + ", ".join(format_poly(g) for g in M.indeterminacy.generators) + ")",
    ])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_res(args) -> int:
    if not 1 <= args.i <= args.n:
        raise UsageError(f"--i must lie in 1..{args.n}")
    if args.length < 2:
        raise UsageError("--len must be at least 2")
    field = args.field or hl.DEFAULT_FIELD
    D = args.degree_bound if args.degree_bound is not None else max(6, args.n + 2)
    C = hl.build_periodic_resolution(args.n, args.i, args.length, field, module="quotient")
    complex_ok = hl.check_complex(C)
    dims, failing = {}, []
    if complex_ok:
        for k in range(1, args.length):
            try:
                dims[k] = hl.truncated_homology_dim(C, k, D, field)
            except hl.WindowError as exc:
                raise UsageError(f"--degree-bound {D} too small: {exc}") from exc
            if dims[k]:
                failing.append(k)
    else:
        failing = [k + 1 for k in hl.composite_failures(C)]
    ok = complex_ok and not failing
    payload = {
        "ring": C.ring.describe(), "transcript": hl.format_transcript(C),
        "maps": [hl.format_matrix(m.matrix) for m in C.maps],
        "degree_bound": D, "interior_homology": {str(k): v for k, v in dims.items()},
        "complex": complex_ok, "exact": ok, "failing_positions": failing,
    }
    lines = [f"ring: {C.ring.describe()}", hl.format_resolution(C),
             f"truncated homology (D={D}): " + ", ".join(f"H{k}={v}" for k, v in dims.items())]
    lines.append("exact" if ok else f"FAILED at positions {failing}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_ext(args) -> int:
    n, i, j = args.n, args.i, args.j
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise UsageError(f"need distinct --i, --j in 1..{n}")
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    field = args.field or hl.DEFAULT_FIELD
    D = args.degree_bound if args.degree_bound is not None else n + 3
    descs = hl.ext_groups(n, i, j, args.k, D, field, check_degree=max(0, min(4, D - n + 1)))
    payload = {"n": n, "i": i, "j": j, "degree_bound": D, "ext": [d.to_json() for d in descs]}
    lines = [f"Ext^{d.k}(J{i}, J{j}) = {d.closed_form_text}  dims {dict(sorted(d.hilbert.items()))}"
             f"  [{'verified' if d.verified else 'MISMATCH'}]" for d in descs]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if all(d.verified for d in descs) else EXIT_FAIL


def cmd_theta(args) -> int:
    T = mr.theta_equations()
    E = mr.theta_eliminate(T)
    S = mr.surface_from_mir(1, 1, 1)
    L = mr.lg2_surface()
    payload = {
        "relations": T.as_text(),
        "eliminated": format_poly(E.cleared),
        "laurent": E.laurent_text(),
        "surface": format_poly(S),
        "potential": L.potential,
        "critical_fibre": [c.to_json() for c in L.components],
        "double_points": [format_poly(g) for g in L.double_points.groebner],
        "branes": [str(b) for b in L.branes],
        "objects": [str(o) for o in L.objects],
    }
    lines = T.as_text() + [
        f"eliminate theta3: {format_poly(E.cleared)} = 0",
        E.laurent_text(),
        f"alpha = beta = gamma = 1: {format_poly(S)} = 0   (potential {L.potential})",
        "critical fibre: " + ", ".join(f"{c.label} [{c.note}]" for c in L.components),
        "objects: " + ", ".join(str(o) for o in L.objects),
    ]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, n=args.n, seed=args.seed, degree_bound=args.degree_bound,
                       field=args.field)
    failed = [c for c in checks if c.failed]
    payload = {"suite": args.suite, "seed": args.seed, "passed": not failed,
               "checks": [c.to_json() for c in checks]}
    counts = sum(c.status == "pass" for c in checks)
    text = "\n".join([c.line() for c in checks] + [
        f"{counts} passed, {len(failed)} failed, {sum(c.status == 'note' for c in checks)} notes"])
    _emit(args, payload, text)
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"mirror": cmd_mirror, "res": cmd_res, "ext": cmd_ext, "theta": cmd_theta, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, IndexError) as exc:
        print(f"lgmirror {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
