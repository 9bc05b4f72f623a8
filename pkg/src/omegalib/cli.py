"""Command-line front end.

Subcommands: allocate, decompose, omega, compose, dominate, test, verify.
All numeric output is exact ``p/q``; ``--approx`` appends a ``~``-marked
decimal reading.  Exit codes: 0 success, 2 usage or parse error, 3
domain-level failure (mass exhaustion, measure violation, broken invariant).
Identical inputs always produce identical bytes.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import ce_real, codespace, machines, solovay, verify
from .bits import format_word
from .errors import InsufficientMass, OmegalibError
from .exact import as_fraction, format_rational

USAGE_ERROR = 2
DOMAIN_ERROR = 3


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path, "r", encoding="ascii") as handle:
        return handle.read().splitlines()


def _exact(value, approx: bool) -> str:
    frac = as_fraction(value)
    text = format_rational(frac)
    if approx:
        text += f"\t~{float(frac):.6f}"
    return text


def _cmd_allocate(args) -> int:
    requests = codespace.parse_request_lines(_read_lines(args.requests))
    try:
        table = codespace.allocate_all(requests)
    except InsufficientMass as exc:
        print(f"error: kraft violation at request {exc.index + 1} "
              f"(length {exc.length})", file=sys.stderr)
        return DOMAIN_ERROR
    for word, output in table:
        print(f"{word}\t{format_word(output)}")
    mass = codespace.pool_measure(word for word, _ in table)
    print(f"mu\t{_exact(mass, args.approx)}")
    return 0


def _cmd_decompose(args) -> int:
    seq = ce_real.parse_sequence_lines(_read_lines(args.sequence))
    decomposition = ce_real.dyadic_decompose(seq, args.k)
    for n, r in zip(decomposition.lengths, decomposition.partials):
        print(f"{n}\t{_exact(r, args.approx)}")
    return 0


def _cmd_omega(args) -> int:
    table = machines.parse_table_lines(_read_lines(args.table))
    if args.k is not None:
        stages = [args.k]
    else:
        stages = list(range(1, len(table) + 1))
    for k in stages:
        print(f"{k}\t{_exact(machines.omega_approx(table, k), args.approx)}")
    return 0


def _cmd_compose(args) -> int:
    outer = machines.parse_table_lines(_read_lines(args.outer))
    inner = machines.parse_table_lines(_read_lines(args.inner))
    for line in machines.format_table_lines(machines.compose(outer, inner)):
        print(line)
    return 0


def _cmd_dominate(args) -> int:
    a_terms = ce_real.parse_rational_terms(_read_lines(args.a))
    b_terms = ce_real.parse_rational_terms(_read_lines(args.b))
    if args.m is not None:
        depth = args.depth if args.depth is not None else min(len(a_terms),
                                                              len(b_terms))
        witness = solovay.extract_witness(ce_real.RationalSeq(a_terms),
                                          ce_real.RationalSeq(b_terms),
                                          args.m, depth)
        print(solovay.format_witness_line(witness))
        return 0
    if args.c is None:
        print("error: dominate needs --c (check) or --m (witness)",
              file=sys.stderr)
        return USAGE_ERROR
    verdict = solovay.check_domination(a_terms, b_terms, args.c)
    print("true" if verdict else "false")
    return 0


def _cmd_test(args) -> int:
    a = ce_real.parse_sequence_lines(_read_lines(args.a))
    b = ce_real.parse_sequence_lines(_read_lines(args.b))
    stage = solovay.build_test(a, b, args.n, args.depth)
    for line in solovay.format_stage_lines(stage):
        print(line)
    return 0


def _cmd_verify(args) -> int:
    try:
        results = verify.run_suites([args.suite], seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    total_passed = total_failed = 0
    for result in results:
        print(f"{result.name}: {result.passed} passed, {result.failed} failed")
        for message in result.failures:
            print(f"  {message}")
        total_passed += result.passed
        total_failed += result.failed
    print(f"total: {total_passed} passed, {total_failed} failed")
    return 0 if total_failed == 0 else DOMAIN_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omegalib",
        description="Exact prefix-free codeword allocation and halting-mass "
                    "arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("allocate",
                       help="serve 'n<TAB>y' codeword requests from a file")
    p.add_argument("requests", help="request file, or - for stdin")
    p.add_argument("--approx", action="store_true",
                   help="append ~decimal readings")
    p.set_defaults(func=_cmd_allocate)

    p = sub.add_parser("decompose",
                       help="dyadic staircase of an increasing rational sequence")
    p.add_argument("sequence", help="file of p/q lines, or - for stdin")
    p.add_argument("--k", type=int, required=True, help="prefix length")
    p.add_argument("--approx", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("omega", help="halting-mass partial sums of a table")
    p.add_argument("table", help="machine table file, or - for stdin")
    p.add_argument("--k", type=int, default=None,
                   help="single stage (default: all stages)")
    p.add_argument("--approx", action="store_true")
    p.set_defaults(func=_cmd_omega)

    p = sub.add_parser("compose", help="run one table on another's outputs")
    p.add_argument("outer", help="outer machine table file")
    p.add_argument("inner", help="inner machine table file")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("dominate",
                       help="check increment domination, or extract a witness")
    p.add_argument("a", help="file of p/q lines for the dominated sequence")
    p.add_argument("b", help="file of p/q lines for the dominating sequence")
    p.add_argument("--c", type=int, default=None, help="domination constant")
    p.add_argument("--m", type=int, default=None,
                   help="witness level (uses c = 2^m)")
    p.add_argument("--depth", type=int, default=None,
                   help="stages to scan for the witness")
    p.set_defaults(func=_cmd_dominate)

    p = sub.add_parser("test", help="build one level of the interval test")
    p.add_argument("a", help="file of p/q lines")
    p.add_argument("b", help="file of p/q lines")
    p.add_argument("--n", type=int, required=True, help="level")
    p.add_argument("--depth", type=int, required=True, help="stages to build")
    p.set_defaults(func=_cmd_test)

    p = sub.add_parser("verify", help="run a deterministic property suite")
    p.add_argument("suite", choices=list(verify.SUITE_NAMES) + ["all"])
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OmegalibError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
