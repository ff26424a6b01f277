"""Command-line front end.

Exit status is 0 whenever a computation finishes, whatever the verdict;
2 for bad input and 3 when a group or subgroup enumeration hits ``--bound``.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import GroupTooLarge, LefschetzError
from .families import FAMILIES, parse_family
from .perm import DEFAULT_BOUND, FiniteGroup, is_prime
from .serialize import build_report, parse_group_file, render_text
from .structure import p_subgroup_classes
from .superclass import SuperclassFunction
from .tables import TABLE_NAMES, render_table, table_data
from .verdict import HMarkCandidate, kernel_membership_cyclic, kernel_necessary

EXIT_OK, EXIT_INPUT, EXIT_BOUND = 0, 2, 3


class InputError(LefschetzError):
    pass


def _add_group_args(sp: argparse.ArgumentParser) -> None:
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", metavar="FILE", help="group definition file")
    src.add_argument("--family", metavar="NAME:PARAMS",
                     help=f"named family, one of: {', '.join(FAMILIES)}")
    sp.add_argument("--prime", "-p", type=int, required=True)
    sp.add_argument("--unit-order", "-m", type=int, default=None,
                    help="order of the multiplicative group of the field (default p-1, or 1 at p=2)")
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                    help="refuse groups with more elements than this")


def _add_format(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefschetz",
        description="p-local invariants and surjectivity verdicts for the Lefschetz homomorphism")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (("analyze", "full report for a group and a prime"),
                       ("verdict", "only the verdict section of the report")):
        sp = sub.add_parser(name, help=text)
        _add_group_args(sp)
        _add_format(sp)
    sp = sub.add_parser("tables", help="dihedral reference tables")
    sp.add_argument("name", help=f"one of {', '.join(TABLE_NAMES)}")
    _add_format(sp)
    sp = sub.add_parser("kernel", help="kernel test for an h-mark function")
    _add_group_args(sp)
    sp.add_argument("--h", required=True, metavar="V1,V2,...",
                    help="values on the G-classes of p-subgroups, in report order")
    _add_format(sp)
    return parser


def load_group(args: argparse.Namespace) -> FiniteGroup:
    if args.group:
        return parse_group_file(args.group, args.bound)
    return parse_family(args.family, args.bound)


def _check_prime(args: argparse.Namespace) -> None:
    if not is_prime(args.prime):
        raise InputError(f"--prime must be prime, got {args.prime}")
    if args.unit_order is not None and args.unit_order < 1:
        raise InputError("--unit-order must be positive")


def _emit(data: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(render_text(data) + "\n")


def cmd_analyze(args: argparse.Namespace, out) -> int:
    _check_prime(args)
    report = build_report(load_group(args), args.prime, args.unit_order)
    if args.command == "verdict":
        _emit({"group": report.group["name"], "prime": report.prime,
               "unit_order": report.unit_order, "verdict": report.verdict}, args.format, out)
    elif args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(report.to_text() + "\n")
    return EXIT_OK


def cmd_tables(args: argparse.Namespace, out) -> int:
    try:
        if args.format == "json":
            out.write(json.dumps(table_data(args.name), indent=2) + "\n")
        else:
            out.write(render_table(args.name) + "\n")
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return EXIT_OK


def _parse_values(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v)
    except ValueError as exc:
        raise InputError(f"--h must be a comma-separated list of integers: {text!r}") from exc


def cmd_kernel(args: argparse.Namespace, out) -> int:
    _check_prime(args)
    G = load_group(args)
    table = p_subgroup_classes(G, args.prime)
    values = _parse_values(args.h)
    if len(values) != len(table):
        raise InputError(f"--h has {len(values)} values but there are {len(table)} classes")
    cand = HMarkCandidate(SuperclassFunction(table, values))
    cyclic = args.prime != 2 and table.sylow.is_cyclic()
    if cyclic:
        report = kernel_membership_cyclic(G, args.prime, cand, table)
    else:
        report = kernel_necessary(G, args.prime, cand, table)
    if report.holds:
        result = "in kernel" if report.exact else "necessary conditions hold"
    else:
        result = "not in kernel"
    data = {"group": G.name, "prime": args.prime, "h": list(values),
            "test": "cyclic-sylow" if cyclic else ("even-valued" if args.prime == 2
                                                   else "necessary-congruences"),
            "exact": report.exact, "result": result, "checks": report.checks,
            "violation": report.violation}
    _emit(data, args.format, out)
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "verdict": cmd_analyze, "tables": cmd_tables,
            "kernel": cmd_kernel}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except GroupTooLarge as exc:
        err.write(f"error: {exc}\n")
        return EXIT_BOUND
    except (LefschetzError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
