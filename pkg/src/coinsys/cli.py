"""Command-line front end.

Subcommands: pay, check, classify, characterize, family, enumerate, validate.
Exit codes: 0 success, 2 usage or input error, 3 validation sweep found a
mismatch.  COINSYS_JOBS overrides the worker count of `validate`.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .canonicity import is_canonical_bruteforce, is_canonical_pearson, plus_minus_class
from .characterization import characterize, general_family_test
from .core import analyze_payment, greedy_representation, lex_smallest_optimal, parse_system
from .errors import CoinSystemError
from .harness import EnumerationSpec, cross_validate, emit_report, enumerate_systems


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coinsys",
        description="Greedy-optimality analysis of coin systems for the change-making problem.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def system_arg(p):
        p.add_argument("-c", "--system", required=True, metavar="COINS",
                       help="comma-separated increasing denominations, e.g. 1,3,4")

    p = sub.add_parser("pay", help="greedy and lex-smallest optimal payments of a value")
    system_arg(p)
    p.add_argument("-v", "--value", required=True, type=int)

    p = sub.add_parser("check", help="canonicity verdict as JSON")
    system_arg(p)
    p.add_argument("--method", choices=("brute", "pearson"), default="brute")

    p = sub.add_parser("classify", help="+/- class of every prefix")
    system_arg(p)

    p = sub.add_parser("characterize", help="closed-form verdict as JSON (n <= 6)")
    system_arg(p)

    p = sub.add_parser("family", help="staircase-family membership test")
    system_arg(p)

    p = sub.add_parser("enumerate", help="stream systems within a bound")
    p.add_argument("-n", required=True, type=int, help="number of denominations")
    p.add_argument("-B", "--bound", required=True, type=int, help="cap on the largest denomination")
    p.add_argument("--canonical-only", action="store_true")

    p = sub.add_parser("validate", help="cross-validate a method against brute force")
    p.add_argument("-n", required=True, type=int)
    p.add_argument("-B", "--bound", required=True, type=int)
    p.add_argument("--compare", choices=("closed", "pearson"), default="closed")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=None)

    return parser


def _default_jobs(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("COINSYS_JOBS")
    if env:
        return int(env)
    return os.cpu_count() or 1


def _run(args) -> int:
    out = sys.stdout
    if args.verb == "pay":
        system = parse_system(args.system)
        if args.value < 0:
            raise CoinSystemError(f"value must be nonnegative, got {args.value}")
        greedy = greedy_representation(system, args.value)
        optimal = lex_smallest_optimal(system, args.value)
        out.write(f"greedy {greedy} total {greedy.total}\n")
        out.write(f"optimal {optimal} total {optimal.total}\n")
        return 0
    if args.verb == "check":
        system = parse_system(args.system)
        decide = is_canonical_bruteforce if args.method == "brute" else is_canonical_pearson
        verdict = decide(system)
        out.write(json.dumps(verdict.to_dict(pm_class=str(plus_minus_class(system)))) + "\n")
        return 0
    if args.verb == "classify":
        out.write(str(plus_minus_class(parse_system(args.system))) + "\n")
        return 0
    if args.verb == "characterize":
        system = parse_system(args.system)
        verdict = characterize(system)
        out.write(json.dumps(verdict.to_dict(pm_class=str(plus_minus_class(system)))) + "\n")
        return 0
    if args.verb == "family":
        out.write(json.dumps(general_family_test(parse_system(args.system))) + "\n")
        return 0
    if args.verb == "enumerate":
        filt = "canonical_only" if args.canonical_only else "all"
        spec = EnumerationSpec(n=args.n, max_denomination=args.bound, filter=filt)
        for system in enumerate_systems(spec):
            out.write(str(system) + "\n")
        return 0
    if args.verb == "validate":
        spec = EnumerationSpec(n=args.n, max_denomination=args.bound)
        report = cross_validate(spec, method=args.compare, jobs=_default_jobs(args.jobs))
        out.write(emit_report(report, format=args.format).decode())
        return 3 if report.mismatches else 0
    raise AssertionError(f"unhandled verb {args.verb!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except CoinSystemError as exc:
        print(f"coinsys: error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
