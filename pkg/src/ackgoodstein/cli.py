"""Command-line front end.

Subcommands: ``ack`` (cutoff evaluation), ``nf`` (normal-form rendering),
``bc`` (base change), ``goodstein`` (traced runs), ``ordinal`` (assignment
and notation queries) and ``verify`` (lemma and property sweeps).

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .ackmath import DEFAULT_BOUND, ExceedsBound, ack_eval
from .base_change import base_change
from .goodstein import VARIANTS, run, trace_to_json
from .normal_form import render_term, to_tree
from .ordinal_map import chi, psi
from .ordinals import cmp, descent, format_ordinal, fund, parse_ordinal
from .verify import run_suite

_BOUND_RE = re.compile(r"^(\d+)(?:[eE](\d+))?$")


def parse_bound(text: str) -> int:
    """Exact bound from decimal or mantissa-exponent shorthand ('1e500')."""
    match = _BOUND_RE.match(text)
    if not match:
        raise argparse.ArgumentTypeError(f"invalid bound {text!r}")
    mantissa, exponent = match.groups()
    value = int(mantissa) * (10 ** int(exponent) if exponent else 1)
    if value < 1:
        raise argparse.ArgumentTypeError("bound must be >= 1")
    return value


def _nat(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ackgoodstein")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ack = sub.add_parser("ack", help="evaluate A_a(k, b) under a cutoff")
    p_ack.add_argument("a", type=_nat)
    p_ack.add_argument("k", type=_nat)
    p_ack.add_argument("b", type=_nat)
    p_ack.add_argument("--bound", type=parse_bound, default=DEFAULT_BOUND)

    p_nf = sub.add_parser("nf", help="k-normal form of c")
    p_nf.add_argument("c", type=_nat)
    p_nf.add_argument("k", type=_nat)
    p_nf.add_argument("--mode", choices=("unnested", "nested"), default="unnested")
    p_nf.add_argument("--json", action="store_true")

    p_bc = sub.add_parser("bc", help="base change c from k to k+1")
    p_bc.add_argument("c", type=_nat)
    p_bc.add_argument("k", type=_nat)
    p_bc.add_argument("--mode", choices=("unnested", "nested"), default="unnested")
    p_bc.add_argument("--bound", type=parse_bound, default=DEFAULT_BOUND)

    p_gs = sub.add_parser("goodstein", help="run a Goodstein process")
    p_gs.add_argument("start", type=_nat)
    p_gs.add_argument("--variant", choices=VARIANTS, default="unnested")
    p_gs.add_argument("--max-steps", type=int, default=50)
    p_gs.add_argument("--bound", type=parse_bound, default=DEFAULT_BOUND)
    p_gs.add_argument("--ordinals", action="store_true")
    p_gs.add_argument("--json", action="store_true")

    p_ord = sub.add_parser("ordinal", help="ordinal assignments and notation queries")
    ord_sub = p_ord.add_subparsers(dest="subcommand", required=True)
    for name in ("psi", "chi"):
        p = ord_sub.add_parser(name)
        p.add_argument("k", type=_nat)
        p.add_argument("c", type=_nat)
    p_fund = ord_sub.add_parser("fund")
    p_fund.add_argument("term")
    p_fund.add_argument("k", type=_nat)
    p_cmp = ord_sub.add_parser("cmp")
    p_cmp.add_argument("left")
    p_cmp.add_argument("right")
    p_desc = ord_sub.add_parser("descent")
    p_desc.add_argument("term")
    p_desc.add_argument("--max-steps", type=int, default=10)

    p_ver = sub.add_parser("verify", help="run lemma and property suites")
    p_ver.add_argument("--suite", choices=("lemmas", "ordinals", "all"), default="all")
    p_ver.add_argument("--bound", type=parse_bound, default=300)
    p_ver.add_argument("--k-max", type=int, default=3)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--samples", type=int, default=2000)
    p_ver.add_argument("--json", action="store_true")
    return parser


def _print_value(value: "int | ExceedsBound") -> None:
    print("exceeds-bound" if isinstance(value, ExceedsBound) else value)


def _cmd_ordinal(args: argparse.Namespace) -> int:
    if args.subcommand in ("psi", "chi"):
        assign = psi if args.subcommand == "psi" else chi
        print(format_ordinal(assign(args.k, args.c)))
    elif args.subcommand == "fund":
        print(format_ordinal(fund(parse_ordinal(args.term), args.k)))
    elif args.subcommand == "cmp":
        order = cmp(parse_ordinal(args.left), parse_ordinal(args.right))
        print({-1: "LT", 0: "EQ", 1: "GT"}[order])
    else:
        for alpha in descent(parse_ordinal(args.term), args.max_steps):
            print(format_ordinal(alpha))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    suites = ("lemmas", "ordinals") if args.suite == "all" else (args.suite,)
    reports = [
        run_suite(name, bound=args.bound, k_max=args.k_max, seed=args.seed, samples=args.samples)
        for name in suites
    ]
    if args.json:
        payload = [report.to_dict() for report in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        for report in reports:
            status = "PASS" if not report.failures else f"FAIL ({len(report.failures)} failures)"
            print(f"suite {report.suite}: {status}, {report.cases} cases, {report.elapsed_ms} ms")
            for failure in report.failures:
                print(f"  {failure.check}: input={failure.input} expected {failure.expected}, got {failure.got}")
    return 1 if any(report.failures for report in reports) else 0


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "ack":
            _print_value(ack_eval(args.a, args.k, args.b, args.bound))
        elif args.command == "nf":
            text = render_term(to_tree(args.c, args.k, args.mode))
            if args.json:
                print(json.dumps({"c": str(args.c), "k": args.k, "mode": args.mode, "term": text}))
            else:
                print(text)
        elif args.command == "bc":
            _print_value(base_change(args.c, args.k, args.mode, args.bound))
        elif args.command == "goodstein":
            trace = run(args.variant, args.start, args.max_steps, args.bound, args.ordinals)
            if args.json:
                print(trace_to_json(trace, indent=2))
            else:
                for record in trace.steps:
                    value = "too_large" if isinstance(record.value, ExceedsBound) else record.value
                    line = f"k={record.k} base={record.base} value={value}"
                    if record.normal_form:
                        line += f"  {record.normal_form}"
                    if record.ordinal is not None:
                        line += f"  [{record.ordinal}]"
                    print(line)
                if trace.terminated:
                    print("terminated")
                elif trace.truncated_reason:
                    print(f"truncated: {trace.truncated_reason}")
        elif args.command == "ordinal":
            return _cmd_ordinal(args)
        else:
            return _cmd_verify(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
