"""
Why: Provides a unified CLI entry point for ktile.
What: Orchestrates subcommands for the reference table, tiling enumeration, decompositions, the counting oracle and identity verification.
How: Uses argparse to dispatch commands to handler functions that return the process exit code.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from .ktile_config import TABLE_FIXTURE_FILE, TABLE_N_MAX, cache_file
from .ktile_decompositions import DecompositionKind, decompose
from .ktile_errors import (
    CacheConflictError,
    EvaluatorDisagreementError,
    KtileError,
    ReducedTilingNotTypeBError,
)
from .ktile_identities import CLASSIC, GENERALIZED, verify_grid
from .ktile_logging import configure_logging
from .ktile_report import FORMATS, TEXT, error_payload, render_oracle, render_report, render_table
from .ktile_seqcore import SequenceCache, table_rows
from .ktile_tilings import Piece, count_oracle, decode, enumerate_type_a, enumerate_type_b, render

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

BOTH = "both"


def parse_values(text: str) -> List[int]:
    """Parse `A..B`, a single integer, or a comma list into sorted non-negative ints."""
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
            if hi < lo:
                raise ValueError(text)
            values = list(range(lo, hi + 1))
        else:
            values = sorted({int(part) for part in text.split(",")})
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N, A..B or a comma list, got {text!r}")
    if values[0] < 0:
        raise argparse.ArgumentTypeError(f"values must be non-negative, got {text!r}")
    return values


def _emit(text: str, output: Optional[str] = None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def handle_table(args: argparse.Namespace) -> int:
    """Handle the 'table' subcommand: print the six reference rows.

    With --check every printed cell that the reference fixture also covers
    is compared against it; any difference makes the exit code 1.
    """
    columns = args.n
    lo = columns[0]
    rows = [(label, [values[n - lo] for n in columns])
            for label, values in table_rows(lo, columns[-1])]
    _emit(render_table(args.format, columns, rows))

    if not args.check:
        return EXIT_OK

    with open(TABLE_FIXTURE_FILE, "r") as f:
        fixture = json.load(f)
    expected = {row["label"]: dict(zip(fixture["n"], row["values"])) for row in fixture["rows"]}
    differences = [
        f"{label} n={n}: expected {expected[label][n]}, got {value}"
        for label, values in rows
        for n, value in zip(columns, values)
        if n in expected.get(label, {}) and expected[label][n] != value
    ]
    if differences:
        print(error_payload("TableMismatch", "; ".join(differences)))
        return EXIT_MISMATCH
    return EXIT_OK


def handle_enumerate(args: argparse.Namespace) -> int:
    """Handle the 'enumerate' subcommand: stream codes, then `count=N`."""
    enumerator = enumerate_type_a if args.cls == "a" else enumerate_type_b
    count = 0
    for t in enumerator(args.k, args.n, args.limit):
        print(f"{t.code}  {render(t)}" if args.render else t.code)
        count += 1
    print(f"count={count}")
    return EXIT_OK


def handle_decompose(args: argparse.Namespace) -> int:
    """Handle the 'decompose' subcommand: split one tiling and print the record.

    The board length follows from the code itself: whites and the black
    square take one cell, each gray takes k.
    """
    cells = sum(args.k if ch == Piece.GRAY.value else 1 for ch in args.code)
    t = decode(args.k, max(cells - 1, 0), args.code)
    try:
        d = decompose(DecompositionKind(args.kind), t)
    except ReducedTilingNotTypeBError as e:
        print(e.decomposition.to_record())
        print(error_payload("ReducedTilingNotTypeBError", e.message))
        return EXIT_MISMATCH
    print(d.to_record())
    return EXIT_OK


def handle_oracle(args: argparse.Namespace) -> int:
    """Handle the 'oracle' subcommand: enumerated counts against F and L."""
    records = count_oracle(args.k, args.n, args.limit)
    _emit(render_oracle(args.format, records))
    return EXIT_OK if all(r.ok for r in records) else EXIT_MISMATCH


def handle_verify(args: argparse.Namespace) -> int:
    """Handle the 'verify' subcommand: evaluate identities over a grid.

    The warm cache is loaded from --cache-file (or KTILE_CACHE_FILE) when
    it exists and written back afterwards; --no-cache runs cold and leaves
    the file alone.
    """
    path = None if args.no_cache else (Path(args.cache_file) if args.cache_file else cache_file())
    cache = SequenceCache.load(path) if path is not None and path.exists() else SequenceCache()

    ids = [i.strip() for i in args.ids.split(",") if i.strip()] if args.ids else None
    convention = None if args.lucas_convention == BOTH else args.lucas_convention
    report = verify_grid(
        ids,
        args.k,
        args.n_max,
        cache=cache,
        multiplier_limit=args.m_max,
        explore=args.explore,
        workers=args.workers,
        convention=convention,
    )

    if path is not None:
        cache.save(path)
    _emit(render_report(args.format, report), args.output)
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ktile", description="Generalized Fibonacci and Lucas numbers through tilings")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Table Command
    p_table = subparsers.add_parser("table", help="Print the reference values of F(k,n) and L(k,n)")
    p_table.add_argument("--n", type=parse_values, default=list(range(TABLE_N_MAX + 1)),
                         help="Columns: A..B, N or a comma list (default 0..11)")
    p_table.add_argument("--format", choices=FORMATS, default=TEXT, help="Output format")
    p_table.add_argument("--check", action="store_true", help="Compare against the reference fixture")
    p_table.set_defaults(func=handle_table)

    # Enumerate Command
    p_enum = subparsers.add_parser("enumerate", help="List every tiling of one class")
    p_enum.add_argument("--class", dest="cls", choices=("a", "b"), required=True, help="Type-A or type-B")
    p_enum.add_argument("--k", type=int, required=True, help="Gray rectangle width")
    p_enum.add_argument("--n", type=int, required=True, help="Board has n+1 cells")
    p_enum.add_argument("--limit", type=int, default=None, help="Override KTILE_ENUM_LIMIT")
    p_enum.add_argument("--render", action="store_true", help="Draw each tiling next to its code")
    p_enum.set_defaults(func=handle_enumerate)

    # Decompose Command
    p_dec = subparsers.add_parser("decompose", help="Split one tiling")
    p_dec.add_argument("--kind", choices=[kind.value for kind in DecompositionKind], required=True,
                       help="Decomposition to apply")
    p_dec.add_argument("--k", type=int, required=True, help="Gray rectangle width")
    p_dec.add_argument("--code", required=True, help="Tiling code over b, g, w")
    p_dec.set_defaults(func=handle_decompose)

    # Oracle Command
    p_oracle = subparsers.add_parser("oracle", help="Count tilings by brute force")
    p_oracle.add_argument("--k", type=parse_values, required=True, help="k values: A..B, N or a comma list")
    p_oracle.add_argument("--n", type=parse_values, required=True, help="n values: A..B, N or a comma list")
    p_oracle.add_argument("--limit", type=int, default=None, help="Override KTILE_ENUM_LIMIT")
    p_oracle.add_argument("--format", choices=FORMATS, default=TEXT, help="Output format")
    p_oracle.set_defaults(func=handle_oracle)

    # Verify Command
    p_verify = subparsers.add_parser("verify", help="Check identities over a grid")
    p_verify.add_argument("--ids", default=None, help="Comma-separated identity ids (default: all)")
    p_verify.add_argument("--k", type=parse_values, default=list(range(2, 7)), help="k values (default 2..6)")
    p_verify.add_argument("--n-max", type=int, default=20, help="Largest board index n")
    p_verify.add_argument("--m-max", type=int, default=None, help="Largest multiplier (KTILE_MULTIPLIER_LIMIT)")
    p_verify.add_argument("--explore", action="store_true", help="Also evaluate outside the stated ranges")
    p_verify.add_argument("--lucas-convention", choices=(CLASSIC, GENERALIZED, BOTH), default=BOTH,
                          help="Lucas reading for the k = 2 Lucas identity")
    p_verify.add_argument("--format", choices=FORMATS, default=TEXT, help="Output format")
    p_verify.add_argument("--output", default=None, help="Write the report to a file")
    p_verify.add_argument("--workers", type=int, default=None, help="Worker threads (KTILE_WORKERS)")
    p_verify.add_argument("--cache-file", default=None, help="Warm cache file (KTILE_CACHE_FILE)")
    p_verify.add_argument("--no-cache", action="store_true", help="Ignore any cache file")
    p_verify.set_defaults(func=handle_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the ktile CLI.

    Parses command-line arguments, dispatches to the matching handler and
    maps library errors to exit codes: 1 for a failed internal cross-check,
    2 for everything the caller can fix.
    """
    # Load environment variables from .env file
    load_dotenv()
    configure_logging()

    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (EvaluatorDisagreementError, CacheConflictError) as e:
        print(error_payload(type(e).__name__, e.message))
        return EXIT_MISMATCH
    except KtileError as e:
        print(error_payload(type(e).__name__, e.message))
        return EXIT_USAGE
    except OSError as e:
        print(error_payload("OSError", str(e)))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
