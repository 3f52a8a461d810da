"""Command-line surface: analyze, witness, reverse, bounds, semigroup close.

Exit codes: 0 success, 2 malformed input or unusable file, 3 resource cap
hit, 1 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .automata import (
    DEFAULT_SIMON_CAP,
    DEFAULT_SUBSET_CAP,
    SimonResult,
    analyze,
    quotient_complexity,
    reversal_complexity,
)
from .bounds import BoundsRow, bounds_report
from .errors import (
    DimensionError,
    InternalError,
    ParseError,
    ResourceLimitError,
)
from .formats import emit_bundle, parse_dfa, parse_transformation_list
from .semigroups import DEFAULT_CLOSURE_CAP, close
from .witnesses import DEFAULT_WITNESS_CAP, witness_bundle

__all__ = ["main"]

_CLI_KINDS = {
    "rtrivial": "r-trivial-dfa",
    "jtrivial-dfa": "reversal-dfa",
    "jtrivial-gens": "j-trivial-generators",
    "jtrivial-monoid": "j-trivial-monoid",
}

_ANALYZE_COLUMNS = (
    "reachable_states",
    "quotient_complexity",
    "syntactic_complexity",
    "monoid_size",
    "partially_ordered",
    "r_trivial",
    "l_trivial",
    "j_trivial",
    "h_trivial",
    "simon_component_ok",
    "simon_detail",
)

_BOUNDS_COLUMNS = (
    "n",
    "r_bound",
    "j_bound",
    "j_floor_e",
    "rev_bound",
    "r_witness",
    "j_witness",
    "rev_witness",
    "brute_max",
)


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _yes_no(value: bool) -> str:
    return "yes" if value else "no"


def _simon_status(result: SimonResult) -> str:
    if result.ok is None:
        return "skipped"
    return _yes_no(result.ok)


def _simon_detail(result: SimonResult) -> str:
    if result.ok:
        return ""
    if result.witness_letters is not None:
        letters = " ".join(result.witness_letters)
        states = " ".join(str(q) for q in result.witness_states)
        return f"letters {letters}; maximal states {states}"
    return result.reason or ""


def _cmd_analyze(args: argparse.Namespace) -> int:
    report = analyze(
        parse_dfa(_read_text(args.file)),
        simon_cap=args.simon_cap,
        closure_cap=args.closure_cap,
    )
    values = (
        str(report.reachable_states),
        str(report.quotient_complexity),
        str(report.syntactic_complexity),
        str(report.monoid_size),
        _yes_no(report.partially_ordered),
        _yes_no(report.r_trivial),
        _yes_no(report.l_trivial),
        _yes_no(report.j_trivial),
        _yes_no(report.h_trivial),
        _simon_status(report.simon),
        _simon_detail(report.simon),
    )
    if args.format == "tsv":
        print("\t".join(_ANALYZE_COLUMNS))
        print("\t".join(values))
    else:
        for name, value in zip(_ANALYZE_COLUMNS, values):
            if name == "simon_detail" and not value:
                continue
            print(f"{name}: {value}")
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    bundle = witness_bundle(_CLI_KINDS[args.kind], args.n, cap=args.cap)
    text = emit_bundle(bundle)
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_reverse(args: argparse.Namespace) -> int:
    d = parse_dfa(_read_text(args.file))
    print(f"quotient_complexity: {quotient_complexity(d)}")
    print(f"reversal_complexity: {reversal_complexity(d, subset_cap=args.subset_cap)}")
    return 0


def _row_cells(row: BoundsRow) -> tuple[str, ...]:
    def cell(value: int | None) -> str:
        return "-" if value is None else str(value)

    return (
        str(row.n),
        str(row.r_bound),
        str(row.j_bound),
        str(row.j_bound_floor_e),
        str(row.reversal_bound),
        cell(row.r_witness),
        cell(row.j_witness),
        cell(row.reversal_witness),
        cell(row.brute_force_max),
    )


def _print_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> None:
    widths = [
        max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    print("  ".join(header[i].rjust(widths[i]) for i in range(len(header))))
    for row in rows:
        print("  ".join(row[i].rjust(widths[i]) for i in range(len(header))))


def _cmd_bounds(args: argparse.Namespace) -> int:
    rows = bounds_report(
        args.max_n,
        witness_cap=args.witness_cap,
        brute_max_n=args.brute_max_n,
        subset_cap=args.subset_cap,
        closure_cap=args.closure_cap,
    )
    cells = [_row_cells(row) for row in rows]
    if args.format == "tsv":
        print("\t".join(_BOUNDS_COLUMNS))
        for row in cells:
            print("\t".join(row))
    else:
        _print_table(_BOUNDS_COLUMNS, cells)
    if args.plot is not None:
        from .plotting import render_bounds_figure

        render_bounds_figure(rows, args.plot)
    return 0


def _cmd_semigroup_close(args: argparse.Namespace) -> int:
    maps = parse_transformation_list(_read_text(args.file))
    if not maps:
        raise ParseError("file contains no transformations")
    semigroup = close(maps, cap=args.closure_cap)
    print(f"size: {len(semigroup)}")
    if args.list_elements:
        for t in semigroup.elements:
            print(t)
    return 0


def _add_closure_cap(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--closure-cap",
        type=int,
        default=DEFAULT_CLOSURE_CAP,
        metavar="K",
        help="abort closure computations beyond K elements (default %(default)s)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenbench",
        description=(
            "Workbench for transformation semigroups and finite automata: "
            "syntactic complexity, Green-relation triviality, extremal "
            "witnesses and bound verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze_p = sub.add_parser(
        "analyze",
        help="classify the language of a DFA file",
        epilog="TSV columns: " + " ".join(_ANALYZE_COLUMNS),
    )
    analyze_p.add_argument("file", help="DFA in the line-oriented text format")
    analyze_p.add_argument(
        "--simon-cap",
        type=int,
        default=DEFAULT_SIMON_CAP,
        metavar="K",
        help="skip the component check beyond K letters (default %(default)s)",
    )
    _add_closure_cap(analyze_p)
    analyze_p.add_argument("--format", choices=("text", "tsv"), default="text")
    analyze_p.set_defaults(func=_cmd_analyze)

    witness_p = sub.add_parser("witness", help="emit an extremal witness")
    witness_p.add_argument("kind", choices=tuple(_CLI_KINDS))
    witness_p.add_argument("-n", type=int, required=True, help="number of states")
    witness_p.add_argument("-o", "--output", metavar="FILE", help="write here instead of stdout")
    witness_p.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_WITNESS_CAP,
        metavar="K",
        help="refuse constructions beyond K states (default %(default)s)",
    )
    witness_p.set_defaults(func=_cmd_witness)

    reverse_p = sub.add_parser(
        "reverse", help="quotient complexity of a DFA's language and its reversal"
    )
    reverse_p.add_argument("file", help="DFA in the line-oriented text format")
    reverse_p.add_argument(
        "--subset-cap",
        type=int,
        default=DEFAULT_SUBSET_CAP,
        metavar="K",
        help="refuse subset constructions beyond K source states (default %(default)s)",
    )
    reverse_p.set_defaults(func=_cmd_reverse)

    bounds_p = sub.add_parser(
        "bounds",
        help="bound table with witnessed values",
        epilog="TSV columns: " + " ".join(_BOUNDS_COLUMNS),
    )
    bounds_p.add_argument("--max-n", type=int, required=True, metavar="N")
    bounds_p.add_argument(
        "--brute-max-n",
        type=int,
        default=0,
        metavar="M",
        help="fill the brute_max column up to M states (default off)",
    )
    bounds_p.add_argument(
        "--witness-cap",
        type=int,
        default=DEFAULT_WITNESS_CAP,
        metavar="K",
        help="fill witness columns up to K states (default %(default)s)",
    )
    bounds_p.add_argument(
        "--subset-cap",
        type=int,
        default=DEFAULT_SUBSET_CAP,
        metavar="K",
        help="refuse subset constructions beyond K source states (default %(default)s)",
    )
    _add_closure_cap(bounds_p)
    bounds_p.add_argument("--format", choices=("text", "tsv"), default="text")
    bounds_p.add_argument(
        "--plot", metavar="FILE", help="also render the bound curves to FILE"
    )
    bounds_p.set_defaults(func=_cmd_bounds)

    semigroup_p = sub.add_parser("semigroup", help="transformation semigroup operations")
    semigroup_sub = semigroup_p.add_subparsers(dest="subcommand", required=True)
    close_p = semigroup_sub.add_parser(
        "close", help="close a transformation list under composition"
    )
    close_p.add_argument("file", help="transformation list file")
    close_p.add_argument(
        "--list",
        dest="list_elements",
        action="store_true",
        help="print all elements in canonical order",
    )
    _add_closure_cap(close_p)
    close_p.set_defaults(func=_cmd_semigroup_close)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DimensionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
