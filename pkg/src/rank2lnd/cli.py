"""Command-line front end.

    rank2lnd triangularizable --spec '{"kernel_pair": {"x": "X", "p": "Y^2+X*Z"}}'
    rank2lnd image-ideal --input d.json --n 12 --json
    rank2lnd verify --seed 7

Exit status: 0 success, 1 analysis failure or undecided verdict, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .derivation import DEFAULT_CAP, homogeneity_degree, is_irreducible, nilpotency_probe
from .errors import ParseError, Rank2Error, SpecError, VariableMismatch, ZeroDerivation
from .image_ideal import image_ideal, ntrf_split
from .newton import grnp_shape_check, kernel_triangle_check, newton_polygon
from .normal_form import XYZ, analyze
from .parse import parse_polynomial
from .spec_io import DerivationSpec, load_spec_file, parse_spec
from .suite import run_instance_suite, run_random_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
INPUT_ERRORS = (ParseError, SpecError, VariableMismatch, OSError)


class InputError(Exception):
    pass


def _load(args) -> DerivationSpec:
    if args.input and args.spec:
        raise InputError("give exactly one of --input and --spec")
    if args.spec:
        return parse_spec(args.spec)
    if args.input:
        if args.input == "-":
            return parse_spec(sys.stdin.read())
        return load_spec_file(args.input)
    raise InputError("an input derivation is required (--input FILE or --spec JSON)")


def _analysis(spec: DerivationSpec, args, verify: bool = True):
    return analyze(spec.derivation, spec.kernel_pair, cap=args.cap, verify=verify)


# -- subcommands: each returns (success, report dict, text lines) -------------


def cmd_check(args):
    spec = _load(args)
    D = spec.derivation
    probe = nilpotency_probe(D, args.cap)
    try:
        irreducible = is_irreducible(D)
    except ZeroDerivation:
        irreducible = None
    degree = homogeneity_degree(D)
    report = {"derivation": D.as_dict(), "nilpotency": probe.status, "deg_D": probe.degrees,
              "irreducible": irreducible, "homogeneous_degree": degree}
    ok = probe.ok and bool(irreducible) and degree is not None
    lines = [f"derivation: {D}",
             f"nilpotent on variables: {probe.status} {probe.degrees}",
             f"irreducible: {irreducible}",
             f"homogeneous degree: {degree}"]
    return ok, report, lines


def cmd_normal_form(args):
    a = _analysis(_load(args), args, verify=False)
    report = {"d": a.d, "kernel_variable": str(a.x), "kernel_generator": str(a.kernel_generator),
              "sa": a.sa.to_json(), "sb": a.sb.to_json()}
    lines = [f"degree d = {a.d}, kernel variable {a.x}",
             f"sa: P = {a.sa.p_normalized} (unit {a.sa.unit}, gamma {a.sa.gamma})",
             f"sb: P = {a.sb.p}, deg_Z P = {a.sb.zdeg}, beta = {a.sb.beta}",
             "coordinates: " + ", ".join(f"{k} = {v}" for k, v in a.sb.change.to_json()["forms"].items())]
    lines += [f"  f_{j} = {f}" for j, f in sorted(a.sb.fj.items(), reverse=True)]
    return True, report, lines


def cmd_triangularizable(args):
    a = _analysis(_load(args), args)
    v = a.verdict
    report = {"verdict": v.to_json(), "verification": a.verification.to_json() if a.verification else None,
              "newton": a.newton}
    lines = [f"verdict: {v.kind}", f"normal form: P = {v.poly}",
             "coordinates: " + ", ".join(f"{k} = {f}" for k, f in v.change.to_json()["forms"].items())]
    if v.decided:
        lines.append(f"deg_D(Y) = {v.degd_y}, deg_D(Z) = {v.degd_z}")
    if v.ntr is not None:
        n = v.ntr
        lines += [f"T = {n.t_def} (h = {n.h}), c = ({', '.join(str(c) for c in n.c)})",
                  f"D(T) = {n.slice_image()}"]
    if v.reason:
        lines.append(f"reason: {v.reason} [{v.reason_code}]")
    if a.verification is not None:
        lines.append(f"verification: {'ok' if a.verification.ok else 'FAILED'}")
    return v.decided, report, lines


def _split_columns(v, n):
    if v.kind == "triangular":
        t, r = divmod(n, v.d + 2)
        return t, r, None
    r, s, t = ntrf_split(n, v.ntr.p, v.ntr.q)
    return t, r, s


def cmd_image_ideal(args):
    spec = _load(args)
    a = _analysis(spec, args)
    v = a.verdict
    if not v.decided:
        report = {"verdict": v.kind, "reason": v.reason, "reason_code": v.reason_code, "rows": []}
        return False, report, [f"image ideals are not classified for this input: {v.reason}"]
    rows, lines = [], [f"verdict {v.kind}, d = {v.d}",
                       f"{'n':>3} {'t':>3} {'r':>3} {'s':>3} {'formula':>8} {'oracle':>7}  scalar"]
    for n in range(args.n + 1):
        res = image_ideal(spec.derivation, v, n)
        t, r, s = _split_columns(v, n)
        row = {"n": n, "t": t, "r": r, "s": s, "formula": res.formula_exponent, "oracle": res.exponent,
               "scalar": str(res.witness_scalar)}
        rows.append(row)
        lines.append(f"{n:>3} {t:>3} {r:>3} {'-' if s is None else s:>3} {res.formula_exponent:>8} "
                     f"{res.exponent:>7}  {res.witness_scalar}")
    return True, {"verdict": v.kind, "d": v.d, "rows": rows}, lines


def cmd_newton(args):
    if args.poly:
        if args.input or args.spec:
            raise InputError("--poly cannot be combined with --input or --spec")
        P, source = parse_polynomial(args.poly, XYZ), "argument"
    else:
        a = _analysis(_load(args), args, verify=False)
        P, source = a.sb.p, "normal-form kernel generator"
    np_ = newton_polygon(P, "Y", "Z")
    tri = kernel_triangle_check(np_)
    report = {"polynomial": str(P), "source": source, "hull": [list(p) for p in np_.hull],
              "triangle": tri.to_json()}
    lines = [f"P = {P} ({source})", f"hull: {json.dumps(report['hull'])}",
             f"kernel triangle: {'pass' if tri.passed else 'fail'} " + (tri.divides or tri.reason or "")]
    ok = tri.passed
    try:
        shape = grnp_shape_check(P, "Y", "Z")
    except ValueError as exc:
        report["shape"] = {"applicable": False, "reason": str(exc)}
        lines.append("shape check: not applicable")
    else:
        report["shape"] = shape.to_json()
        ok = ok and shape.passed
        lines.append(f"shape check (q = {shape.q}): {'pass' if shape.passed else 'fail'}")
    return ok, report, lines


def cmd_verify(args):
    rng = random.Random(args.seed)
    start = time.perf_counter()
    if args.input or args.spec:
        results = run_instance_suite(_load(args), rng, max_n=args.n, trunc=args.trunc, cap=args.cap)
    else:
        results = run_random_suite(rng, max_n=args.n, trunc=args.trunc, cap=args.cap, count=args.count)
    elapsed = time.perf_counter() - start
    ok = all(r["passed"] for r in results)
    lines = [f"{'PASS' if r['passed'] else 'FAIL'}  {r['name']}: {r['detail']}" for r in results]
    lines.append(f"{sum(r['passed'] for r in results)}/{len(results)} checks passed in {elapsed:.1f} s "
                 f"(seed {args.seed})")
    return ok, {"seed": args.seed, "checks": results, "seconds": round(elapsed, 3)}, lines


COMMANDS = {
    "check": (cmd_check, "nilpotency probe, irreducibility and homogeneity degree"),
    "normal-form": (cmd_normal_form, "linear normal form of the kernel generator"),
    "triangularizable": (cmd_triangularizable, "decide triangularizability and verify the result"),
    "image-ideal": (cmd_image_ideal, "image-ideal exponents for n = 0..K, formula against oracle"),
    "newton": (cmd_newton, "Newton polygon and kernel-shape tests"),
    "verify": (cmd_verify, "property suite on one input, or randomized when no input is given"),
}


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rank2lnd", description="Homogeneous rank-2 locally nilpotent derivations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE", help="derivation document ('-' for stdin)")
    common.add_argument("--spec", metavar="JSON", help="inline derivation document")
    common.add_argument("--n", type=_nonneg, default=12, metavar="K", help="largest n for image ideals (default 12)")
    common.add_argument("--cap", type=_positive, default=DEFAULT_CAP, metavar="C",
                        help=f"iteration cap for deg_D (default {DEFAULT_CAP})")
    common.add_argument("--trunc", type=_nonneg, default=8, metavar="N",
                        help="degree bound for the freeness check (default 8)")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=0, metavar="S", help="seed for randomized checks (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name == "newton":
            p.add_argument("--poly", metavar="POLY", help="polynomial in X, Y, Z instead of a derivation")
        if name == "verify":
            p.add_argument("--count", type=_positive, default=5, metavar="M",
                           help="random instances per family when no input is given (default 5)")
    return parser


def _emit(args, report: dict, lines: list[str], out) -> None:
    if args.json:
        print(json.dumps(report, indent=2), file=out)
    else:
        for line in lines:
            print(line, file=out)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        ok, report, lines = handler(args)
    except (InputError, *INPUT_ERRORS) as exc:
        _emit(args, {"success": False, "error": "input", "message": str(exc)}, [f"input error: {exc}"], sys.stderr)
        return EXIT_INPUT
    except Rank2Error as exc:
        report = {"success": False, "error": exc.code, "message": str(exc)}
        _emit(args, report, [f"analysis failed [{exc.code}]: {exc}"], sys.stdout)
        return EXIT_FAIL
    report = {"success": ok, "command": args.command, **report}
    _emit(args, report, lines, sys.stdout)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
