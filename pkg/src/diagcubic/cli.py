"""Command-line front end: classify, lines, cohomology, verify.

Exit status: 0 on success, 1 when a verification check fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import classifier as clf
from .cohomology import FiniteGroup, LatticeModule, SizeGuardExceeded, bar_cohomology, describe_group, tate_h_minus1
from .cubic_geometry.lines import S, T, W, incidence_json
from .cubic_geometry.picard import action_on_pic, pic_classes_json, rank5_action
from .paper_suite import CHECKS, FAULTS, full_report, inject_fault, theorem2_skeleton


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _rational(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if q == 0:
        raise argparse.ArgumentTypeError("coefficients must be nonzero")
    return q


def _f3_vector(text: str) -> tuple:
    try:
        values = tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated digits 0..2, got {text!r}")
    if any(not 0 <= v <= 2 for v in values):
        raise argparse.ArgumentTypeError("components must lie in {0, 1, 2}")
    return values


NAMED_CASES = {
    "st-rank5": ("H^1(<s,t>, Pic(V_k')) on the rank-5 lattice", (S, T), rank5_action),
    "s-rank5": ("H^1(<s>, Pic(V_k')) on the rank-5 lattice", (S,), rank5_action),
    "stw-pic": ("H^1(<s,t,w>, Pic) on the full rank-7 lattice", (S, T, W), action_on_pic),
    "manin": ("H^1(<s>, Pic) for x^3+y^3+z^3+dt^3", (S,), action_on_pic),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", default="-", help="output file (default: standard output)")

    p = _Parser(prog="python3 -m diagcubic",
                description="Brauer groups of diagonal cubic surfaces x^3 + b y^3 + c z^3 + d t^3 = 0.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", parents=[common], help="structure of H^1(k, Pic) and Br(V)/Br(k)")
    for name in "abcd":
        c.add_argument(f"--{name}", type=_rational)
    c.add_argument("--lambda", dest="lam", type=_f3_vector, help="cube class of λ as F_3 digits, e.g. 0,1")
    c.add_argument("--mu", type=_f3_vector)
    c.add_argument("--nu", type=_f3_vector)
    c.add_argument("--rational-point", dest="point", action="store_true", default=None,
                   help="V(k) is known to be non-empty")
    c.add_argument("--cd-at-most-2", action="store_true", default=None)

    sub.add_parser("lines", parents=[common], help="incidence graph and Picard classes of the 27 lines")

    h = sub.add_parser("cohomology", parents=[common], help="invariant factors of group cohomology")
    h.add_argument("case", nargs="?", choices=sorted(NAMED_CASES), default="st-rank5")
    h.add_argument("--degree", type=int, choices=(0, 1, 2), default=1)
    for name in "abcd":
        h.add_argument(f"--{name}", type=_rational)

    v = sub.add_parser("verify", parents=[common], help="run the verification battery")
    v.add_argument("--check", choices=sorted(CHECKS), action="append")
    v.add_argument("--inject-fault", choices=sorted(FAULTS), help=argparse.SUPPRESS)
    return p


def _emit(args, payload, text: str):
    out = json.dumps(payload, ensure_ascii=False, indent=2) if args.format == "json" else text
    if args.output == "-":
        print(out)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")


def _surface_input(args) -> clf.SurfaceInput:
    coeffs = [args.a, args.b, args.c, args.d]
    classes = [args.lam, args.mu, args.nu]
    flags = {"has_rational_point": args.point, "cd_at_most_2": args.cd_at_most_2}
    if all(x is not None for x in coeffs) and all(x is None for x in classes):
        return clf.SurfaceInput.rational(*coeffs, **flags)
    if all(x is not None for x in classes) and all(x is None for x in coeffs):
        dims = {len(x) for x in classes}
        if len(dims) != 1:
            raise UsageError("--lambda, --mu and --nu must have the same length")
        vectors = tuple(clf.CubeClassVector.from_vector(x) for x in classes)
        return clf.SurfaceInput.abstract(*vectors, **flags)
    raise UsageError("give all of --a --b --c --d, or all of --lambda --mu --nu")


def cmd_classify(args) -> int:
    inp = _surface_input(args)
    result = clf.brauer_quotient(inp)
    payload = {"structure": result.structure, "tag": result.tag, "condition": result.condition}
    gen = clf.generator_string(inp, result)
    if gen is not None:
        payload["generator"] = gen
    lines = [f"structure: {result.structure}", f"tag: {result.tag}", f"condition: {result.condition}"]
    if gen is not None:
        lines.append(f"generator: {gen}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_lines(args) -> int:
    payload = {"incidence": incidence_json(), "pic_classes": pic_classes_json()}
    text = ["incidence:"]
    text += [f"  {a}: {' '.join(bs)}" for a, bs in payload["incidence"].items()]
    text.append("pic classes ([L0],[L1],[L2],[M0],[M1],[M2], l):")
    text += [f"  {a}: {tuple(v)}" for a, v in payload["pic_classes"].items()]
    _emit(args, payload, "\n".join(text))
    return 0


def cmd_cohomology(args) -> int:
    coeffs = [args.a, args.b, args.c, args.d]
    if any(x is not None for x in coeffs):
        if not all(x is not None for x in coeffs):
            raise UsageError("give all of --a --b --c --d")
        classes = clf.normalize(clf.SurfaceInput.rational(*coeffs))
        elements = clf.galois_elements(*classes)
        gens, action = elements, action_on_pic
        label = "H^n(Gal(k''/k), Pic) for ({})".format(", ".join(str(x) for x in coeffs))
    else:
        label, gens, action = NAMED_CASES[args.case]
    group = FiniteGroup.galois(gens)
    module = LatticeModule(group, action)
    try:
        factors = bar_cohomology(group, module, args.degree)
    except SizeGuardExceeded as exc:
        raise UsageError(str(exc))
    payload = {"case": label.replace("H^n", f"H^{args.degree}").replace("H^1", f"H^{args.degree}"),
               "group_order": group.order, "rank": module.rank, "degree": args.degree,
               "invariant_factors": factors, "group": describe_group(factors)}
    if group.order == 3 and args.degree == 1:
        tate, _ = tate_h_minus1(module.matrices[1], 3)
        payload["tate_h_minus1"] = tate
    text = f"{payload['case']}\n|G| = {group.order}, rank {module.rank}, degree {args.degree}: {payload['group']}"
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    data = inject_fault(args.inject_fault) if args.inject_fault else None
    reports = full_report(data, only=args.check)
    payload = [r.to_json() for r in reports]
    text = []
    for r in reports:
        text.append(f"{r.status.upper():4} {r.name} ({r.elapsed:.2f}s)")
        if r.diff:
            text.append(f"     first failure: {json.dumps(r.diff, ensure_ascii=False)}")
    skeleton = theorem2_skeleton(reports)
    if skeleton:
        text.append(f"certified: {skeleton}")
    _emit(args, payload, "\n".join(text))
    return 0 if all(r.passed for r in reports) else 1


COMMANDS = {"classify": cmd_classify, "lines": cmd_lines, "cohomology": cmd_cohomology, "verify": cmd_verify}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main():
    sys.exit(run())
