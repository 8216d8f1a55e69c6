"""Command-line front end with machine-readable JSON reports.

Exit codes: 0 success, 2 parse/usage error, 3 precondition violation,
4 resource guard, 5 falsification (an internal cross-check failed, which
means a bug rather than bad input).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .errors import (
    FalsificationError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
)
from .grid import (
    Polyomino,
    is_cell_interval,
    is_connected,
    is_simple,
    is_thin,
    maximal_cell_intervals,
    parse_polyomino,
    render_ascii,
)
from .hilbert import (
    a_invariant,
    hilbert_series_recursive,
    hilbert_series_thin,
    is_gorenstein,
    krull_dimension,
    multiplicity,
    regularity,
)
from .ideal import (
    TermOrder,
    buchberger,
    dump_binomials,
    inner_2_minors,
    verify_conjecture,
    verify_theorem,
)
from .enumeration import conjecture_scan
from .rook import rook_number, rook_polynomial_bruteforce, rook_polynomial_recursive
from .structure import find_collapse, has_s_property

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_RESOURCE = 4
EXIT_FALSIFICATION = 5


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _load(args: argparse.Namespace) -> Polyomino:
    return parse_polyomino(_read_input(args.file), args.format)


def _echo(polyomino: Polyomino) -> dict:
    return {
        "cells": [list(c) for c in polyomino.sorted_cells],
        "ascii": render_ascii(polyomino),
        "rank": polyomino.rank,
    }


def _classification(polyomino: Polyomino) -> dict:
    connected = is_connected(polyomino)
    simple = is_simple(polyomino) if connected else None
    thin = is_thin(polyomino)
    report = {
        "connected": connected,
        "simple": simple,
        "thin": thin,
        "cell_interval": is_cell_interval(polyomino),
    }
    if thin:
        report["maximal_intervals"] = [
            {"orientation": iv.orientation, "cells": [list(c) for c in iv.cells]}
            for iv in maximal_cell_intervals(polyomino)
        ]
    else:
        report["maximal_intervals"] = None
    return report


def _emit(report: dict) -> None:
    print(json.dumps(report, indent=2))


def _require_simple_thin_input(polyomino: Polyomino) -> None:
    if not (
        is_connected(polyomino) and is_simple(polyomino) and is_thin(polyomino)
    ):
        raise PreconditionError(
            "input must be a simple thin polyomino; "
            "try `polyalg verify --mode conjecture` for general boards"
        )


def cmd_classify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    polyomino = _load(args)
    report = {**_echo(polyomino), **_classification(polyomino)}
    report["timings"] = (
        {"total_seconds": time.perf_counter() - started} if args.timings else None
    )
    _emit(report)
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    polyomino = _load(args)
    _require_simple_thin_input(polyomino)
    brute = rook_polynomial_bruteforce(polyomino)
    recursive = rook_polynomial_recursive(polyomino)
    if brute != recursive:
        raise FalsificationError(
            f"rook polynomial mismatch: placements give {list(brute.coeffs)}, "
            f"recursion gives {list(recursive.coeffs)}"
        )
    series = hilbert_series_thin(polyomino)
    series_rec = hilbert_series_recursive(polyomino)
    if series != series_rec:
        raise FalsificationError("the two Hilbert-series routes disagree")
    report = {
        **_echo(polyomino),
        **_classification(polyomino),
        "rook_polynomial": list(brute.coeffs),
        "rook_number": brute.degree,
        "h_polynomial": list(series.numerator.coeffs),
        "krull_dimension": series.denom_power,
        "regularity": regularity(polyomino),
        "multiplicity": multiplicity(polyomino),
        "a_invariant": a_invariant(polyomino),
        "s_property": has_s_property(polyomino),
        "gorenstein": is_gorenstein(polyomino),
        "collapse_step": None
        if is_cell_interval(polyomino)
        else find_collapse(polyomino).as_dict(),
    }
    report["timings"] = (
        {"total_seconds": time.perf_counter() - started} if args.timings else None
    )
    _emit(report)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    polyomino = _load(args)
    if args.dump is not None:
        order = TermOrder.for_polyomino(polyomino)
        generators = inner_2_minors(polyomino, order)
        basis = buchberger(generators, order)
        text = (
            "# generators\n"
            + dump_binomials(generators, order)
            + "\n# groebner basis\n"
            + dump_binomials(basis, order)
            + "\n"
        )
        Path(args.dump).write_text(text)
    if args.mode == "theorem":
        _require_simple_thin_input(polyomino)
        depth = args.depth if args.depth is not None else rook_number(polyomino) + 2
        check = verify_theorem(polyomino, depth)
    else:
        if not is_connected(polyomino):
            raise PreconditionError("the conjecture check needs a connected polyomino")
        depth = args.depth if args.depth is not None else rook_number(polyomino) + 3
        check = verify_conjecture(polyomino, depth)
    report = {**_echo(polyomino), "oracle": check.as_dict()}
    report["timings"] = (
        {"total_seconds": time.perf_counter() - started} if args.timings else None
    )
    _emit(report)
    if args.mode == "theorem" and not check.match:
        raise FalsificationError(
            "oracle Hilbert function disagrees with the rook-polynomial series "
            "on a simple thin polyomino"
        )
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    report = conjecture_scan(args.max_rank, jobs=args.jobs)
    out = Path(args.out)
    with out.open("w") as handle:
        for record in report.records:
            handle.write(json.dumps(record.as_dict()) + "\n")
    summary = report.summary()
    summary["out"] = str(out)
    summary["timings"] = (
        {"total_seconds": time.perf_counter() - started} if args.timings else None
    )
    _emit(summary)
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyalg",
        description=(
            "Rook polynomials, Hilbert-Poincare series and Gorenstein "
            "classification of thin polyominoes, with a Groebner-basis oracle."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--timings", action="store_true", help="include timings in the report")

    board = argparse.ArgumentParser(add_help=False, parents=[common])
    board.add_argument("file", help="input file, or - for stdin")
    board.add_argument(
        "--format",
        choices=["auto", "ascii-grid", "coordinate-list"],
        default="auto",
        help="input format (default: auto-detect)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser(
        "classify", parents=[board], help="parse and classify a polyomino"
    )
    classify.set_defaults(func=cmd_classify)

    invariants = sub.add_parser(
        "invariants",
        parents=[board],
        help="rook polynomial, Hilbert series and ring invariants (simple thin input)",
    )
    invariants.set_defaults(func=cmd_invariants)

    verify = sub.add_parser(
        "verify",
        parents=[board],
        help="cross-check the h-polynomial against the Groebner oracle",
    )
    verify.add_argument("--depth", type=int, default=None, help="Hilbert-function depth")
    verify.add_argument(
        "--mode",
        choices=["theorem", "conjecture"],
        default="theorem",
        help="theorem: simple thin boards; conjecture: any connected board",
    )
    verify.add_argument(
        "--dump",
        default=None,
        metavar="PATH",
        help="also write generators and Groebner basis as plain text",
    )
    verify.set_defaults(func=cmd_verify)

    scan = sub.add_parser(
        "scan",
        parents=[common],
        help="run the oracle-vs-rook comparison over all polyominoes up to a rank",
    )
    scan.add_argument("--max-rank", type=_positive_int, required=True)
    scan.add_argument("--jobs", type=_positive_int, default=1)
    scan.add_argument("--out", required=True, help="JSON-lines output path")
    scan.set_defaults(func=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except FalsificationError as exc:
        print(f"falsification: {exc}", file=sys.stderr)
        return EXIT_FALSIFICATION


if __name__ == "__main__":
    sys.exit(main())
