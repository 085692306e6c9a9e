"""Command-line interface.

Exit codes: 0 success, 1 contract violation, 2 input error.
"""

from __future__ import annotations

import argparse
import sys

from .cover import bounded_cover
from .errors import (
    BudgetExhausted,
    InternalInvariantError,
    InvalidSpec,
    NotComplete,
    ParseError,
    TooLarge,
)
from .generators import GenSpec, Kind, generate
from .io import cover_from_dict, cover_to_dict, dumps, graph_from_dict, graph_to_dict, load_json, to_dot
from .oracles import ALPHA_LIMIT, alpha_exact, folk_scan, verify_cover

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


def _budget(text):
    if text == "auto":
        return text
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("budget must be a positive integer or 'auto'")
    if value < 1:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def cmd_cover(args, out) -> int:
    g = graph_from_dict(load_json(args.input))
    if args.budget == "auto":
        try:
            a = max(alpha_exact(g, limit=args.alpha_limit), 1)
        except TooLarge as exc:
            raise TooLarge(f"--budget auto: {exc}") from exc
    else:
        a = args.budget
    try:
        cover = bounded_cover(g, a)
    except (BudgetExhausted, NotComplete) as exc:
        print(f"error: budget {a} is below the independence number: {exc}", file=sys.stderr)
        return VIOLATION
    out.write(dumps(cover_to_dict(cover)))
    report = verify_cover(g, cover, a)
    if not report.ok:
        print(f"error: produced cover failed verification: {report.violations}", file=sys.stderr)
        return VIOLATION
    return OK


def cmd_verify(args, out) -> int:
    g = graph_from_dict(load_json(args.input))
    cover = cover_from_dict(load_json(args.cover))
    a = cover.budget if args.budget is None else args.budget
    if a == "auto":
        a = max(alpha_exact(g, limit=args.alpha_limit), 1)
    report = verify_cover(g, cover, a)
    out.write(dumps(report.as_dict()))
    return OK if report.ok else VIOLATION


def cmd_folk_scan(args, out) -> int:
    summary = folk_scan(args.n)
    out.write(dumps(summary))
    return OK if summary["violations"] == 0 else VIOLATION


def cmd_export_dot(args, out) -> int:
    g = graph_from_dict(load_json(args.input))
    cover = cover_from_dict(load_json(args.cover)) if args.cover else None
    out.write(to_dot(g, cover))
    return OK


def cmd_generate(args, out) -> int:
    try:
        spec = GenSpec(
            Kind(args.kind), n=args.n, p_edge=args.p_edge, p_red=args.p_red,
            p_blue=args.p_blue, p_both=args.p_both, seed=args.seed, a=args.a,
        )
    except ValueError as exc:
        raise InvalidSpec(str(exc)) from exc
    out.write(dumps(graph_to_dict(generate(spec), spec)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monocover",
        description="Bounded-diameter monochromatic covers of 2-edge-coloured graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cover", help="compute a cover")
    p.add_argument("--input", required=True)
    p.add_argument("--budget", type=_budget, default="auto", help="upper bound on alpha, or 'auto'")
    p.add_argument("--alpha-limit", type=int, default=ALPHA_LIMIT, help="vertex limit for --budget auto")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="check a cover against an instance")
    p.add_argument("--input", required=True)
    p.add_argument("--cover", required=True)
    p.add_argument("--budget", type=_budget, default=None, help="defaults to the cover's budget")
    p.add_argument("--alpha-limit", type=int, default=ALPHA_LIMIT)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("folk-scan", help="classify every colouring of K_n (n <= 5)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_folk_scan)

    p = sub.add_parser("export-dot", help="Graphviz rendering of an instance")
    p.add_argument("--input", required=True)
    p.add_argument("--cover")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("generate", help="write a generated instance")
    p.add_argument("--kind", choices=[k.value for k in Kind], required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--a", type=int, default=2, help="budget the gadget kinds are built for")
    p.add_argument("--p-edge", type=float, default=0.5)
    p.add_argument("--p-red", type=float, default=0.4)
    p.add_argument("--p-blue", type=float, default=0.4)
    p.add_argument("--p-both", type=float, default=0.2)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, TooLarge, InvalidSpec) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return VIOLATION


if __name__ == "__main__":
    sys.exit(main())
