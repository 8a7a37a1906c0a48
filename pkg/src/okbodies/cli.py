"""Command-line front end binding all modules.

Exit codes: 0 success, 1 mathematical impossibility (not big, not
pseudo-effective, infinite orbit, ...), 2 usage errors (malformed rationals,
out-of-range n, unknown flags), so scripted pipelines can branch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import figures
from .bodies import body_L, dissection, nagata_strip, okounkov_body
from .cones import (
    is_ample,
    is_big,
    is_nef,
    is_pseudoeffective,
    pseudoeffective_certificate,
    seshadri,
)
from .errors import OkbodyError
from .lattice import DivisorClass, uniform_class
from .polygon import Polygon
from .scalars import format_rational, parse_rational
from .verify import SUITES, run_suite
from .weyl import degree_histogram, exceptional_classes, exceptional_classes_diophantine
from .zariski import zariski_decompose


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="okbodies",
        description=(
            "Exact Okounkov bodies, Zariski decompositions and Seshadri "
            "constants on blow-ups of the projective plane."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curves", help="enumerate exceptional curve classes")
    p.add_argument("-n", type=int, required=True, help="number of blown-up points (1..8)")
    p.add_argument("--histogram", action="store_true", help="print the degree histogram")
    p.add_argument("--oracle", action="store_true", help="use the Diophantine enumeration")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.add_argument("-o", metavar="FILE", help="write output to FILE")

    p = sub.add_parser("seshadri", help="exact multi-point Seshadri constant")
    p.add_argument("-n", type=int, required=True, help="number of points (1..9)")
    p.add_argument("-o", metavar="FILE")

    p = sub.add_parser("test", help="positivity predicates with certificates")
    p.add_argument("-n", type=int, required=True)
    p.add_argument(
        "-D",
        required=True,
        help='class as "d,m1,m2,..." with rational entries (use -D=-1,0,... for negative d)',
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--nef", action="store_true")
    group.add_argument("--big", action="store_true")
    group.add_argument("--ample", action="store_true")
    group.add_argument("--psef", action="store_true")
    p.add_argument("-o", metavar="FILE")

    p = sub.add_parser("zariski", help="exact Zariski decomposition")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-D", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", metavar="FILE")

    p = sub.add_parser("body", help="Okounkov body of a class")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-D", help='class as "d,m1,m2,..."')
    p.add_argument("-d", help="degree of d*e0 - m*sum(e_i)")
    p.add_argument("-m", help="common multiplicity")
    p.add_argument("--format", choices=("text", "json", "svg", "tikz"), default="text")
    p.add_argument("--json", action="store_true", help="shorthand for --format json")
    p.add_argument("--scale", default=None, help="figure unit length (default 10.2)")
    p.add_argument("-o", metavar="FILE")

    p = sub.add_parser("dissect", help="nested bodies for n = 0..9 at a fixed ratio")
    p.add_argument("--eps", default="1/3", help="multiplicity ratio (default 1/3)")
    p.add_argument("--format", choices=("text", "json", "svg", "tikz"), default="svg")
    p.add_argument("--scale", default=None, help="figure unit length (default 10.2)")
    p.add_argument("-o", metavar="FILE")

    p = sub.add_parser("nagata", help="predicted strip bodies for n >= 9")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", required=True)
    p.add_argument("-m", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", metavar="FILE")

    p = sub.add_parser("verify", help="run the self-verification suites")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)} or all")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("-o", metavar="FILE")

    return parser


def _parse_class(args) -> DivisorClass:
    cls = DivisorClass.parse(args.D, n=args.n)
    return cls


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_curves(args) -> tuple[int, str]:
    classes = (
        exceptional_classes_diophantine(args.n) if args.oracle else exceptional_classes(args.n)
    )
    hist = degree_histogram(classes)
    if args.json:
        payload = {"n": args.n, "classes": [c.to_json() for c in classes]}
        if args.histogram:
            payload["histogram"] = {str(d): k for d, k in hist.items()}
        return 0, json.dumps(payload, indent=2) + "\n"
    lines = [str(c) for c in classes]
    lines.append(f"total: {len(classes)}")
    if args.histogram:
        lines.append(
            "degree histogram: " + " ".join(f"{d}:{k}" for d, k in hist.items())
        )
    return 0, "\n".join(lines) + "\n"


def _cmd_seshadri(args) -> tuple[int, str]:
    return 0, format_rational(seshadri(args.n)) + "\n"


def _cmd_test(args) -> tuple[int, str]:
    D = _parse_class(args)
    lines = []
    if args.nef:
        from .cones import nef_violation

        bad = nef_violation(D)
        verdict = bad is None
        lines.append(f"nef: {str(verdict).lower()}")
        if bad is not None:
            lines.append(f"certificate: meets generator {bad} negatively")
    elif args.ample:
        from .cones import ample_violation
        from .lattice import self_intersection

        verdict = is_ample(D)
        lines.append(f"ample: {str(verdict).lower()}")
        if self_intersection(D) <= 0:
            lines.append(f"certificate: D^2 = {format_rational(self_intersection(D))} <= 0")
        elif not verdict:
            lines.append(f"certificate: nonpositive against generator {ample_violation(D)}")
    elif args.big:
        verdict = is_big(D)
        lines.append(f"big: {str(verdict).lower()}")
        if is_pseudoeffective(D):
            vol = zariski_decompose(D).volume()
            lines.append(f"certificate: volume = {format_rational(vol)}")
        else:
            lines.append("certificate: not even pseudo-effective")
    else:
        member, cert = pseudoeffective_certificate(D)
        lines.append(f"pseudo-effective: {str(member).lower()}")
        if member:
            combo = " + ".join(f"{format_rational(x)}*{c}" for c, x in cert)
            lines.append(f"certificate: D = {combo or '0'}")
        else:
            lines.append(f"certificate: nef class {cert} pairs negatively with D")
    return 0, "\n".join(lines) + "\n"


def _cmd_zariski(args) -> tuple[int, str]:
    D = _parse_class(args)
    z = zariski_decompose(D)
    if args.json:
        return 0, json.dumps(z.to_json(), indent=2) + "\n"
    lines = [f"input:    {D}", f"positive: {z.positive}"]
    if z.negative:
        lines.append("negative:")
        for curve, coeff in z.negative:
            lines.append(f"  {format_rational(coeff)} * {curve}")
    else:
        lines.append("negative: 0")
    lines.append("checks: P nef, P.C = 0 on the support, Gram negative-definite")
    return 0, "\n".join(lines) + "\n"


def _cmd_body(args) -> tuple[int, str]:
    if (args.D is None) == (args.d is None and args.m is None):
        raise ValueError("give either -D or both -d and -m")
    if args.D is not None:
        D = _parse_class(args)
        body = okounkov_body(D)
    else:
        if args.d is None or args.m is None:
            raise ValueError("give both -d and -m")
        body = body_L(args.n, parse_rational(args.d), parse_rational(args.m))
    return 0, _render_bodies([(args.n, body)], args)


def _cmd_dissect(args) -> tuple[int, str]:
    eps = parse_rational(args.eps)
    bodies = dissection(eps)
    return 0, _render_bodies(bodies, args, eps=eps)


def _render_bodies(bodies, args, eps=None) -> str:
    fmt = getattr(args, "format", "text")
    if getattr(args, "json", False):
        fmt = "json"
    if fmt == "json":
        payload = [body.to_payload(n) for n, body in bodies]
        doc = {"bodies": payload}
        if eps is not None:
            doc["eps"] = format_rational(eps)
        return json.dumps(doc, indent=2) + "\n"
    if fmt in ("svg", "tikz"):
        scale = parse_rational(args.scale) if args.scale else figures.DEFAULT_SCALE
        return figures.emit_figure(bodies, fmt=fmt, scale=scale)
    lines = []
    for n, body in bodies:
        lines.append(f"n={n}: {body}")
    return "\n".join(lines) + "\n"


def _cmd_nagata(args) -> tuple[int, str]:
    body = nagata_strip(args.n, parse_rational(args.d), parse_rational(args.m))
    if args.json:
        return 0, json.dumps({"bodies": [body.to_payload(args.n)]}, indent=2) + "\n"
    return 0, f"n={args.n}: {body}\n"


def _cmd_verify(args) -> tuple[int, str]:
    reports = run_suite(args.suite, seed=args.seed)
    text = "\n".join(r.render() for r in reports)
    failures = sum(1 for r in reports for c in r.checks if c.status == "FAIL")
    total = sum(len(r.checks) for r in reports)
    text += f"\nTOTAL: {total} checks, {failures} failures\n"
    return (0 if failures == 0 else 1), text


_COMMANDS = {
    "curves": _cmd_curves,
    "seshadri": _cmd_seshadri,
    "test": _cmd_test,
    "zariski": _cmd_zariski,
    "body": _cmd_body,
    "dissect": _cmd_dissect,
    "nagata": _cmd_nagata,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = _COMMANDS[args.command](args)
    except OkbodyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    _emit(text, getattr(args, "o", None))
    return code


if __name__ == "__main__":
    sys.exit(main())
