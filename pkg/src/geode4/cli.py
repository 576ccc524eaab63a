"""Command line front end.

Exact values print to stdout; timing and progress chatter goes to stderr,
so stdout is deterministic and safe to diff or pipe.  Any domain error
(bad input, failed internal check, unreadable checkpoint) exits 1 with a
message on stderr; argparse rejects malformed usage with exit 2.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from .errors import (
    BudgetExceededError,
    CheckpointFormatError,
    CheckpointMismatchError,
    InexactDivisionError,
    NonPositiveCellError,
)
from .geode import GeodeMemo, geode_element
from .hypercat import hyper_catalan
from .runner import BENCH_COLUMNS, RunConfig, bench, run_diagonal, summary_lines
from .series import (
    coefficient,
    divide_by_s1,
    face_layer_count,
    monomial_count,
    series_solve,
    verify_geometric_zero,
)
from .trees import DEFAULT_COUNT_BUDGET, enumerate_count


def _nat(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError("value must be >= 0")
    return value


def _positive(text: str) -> int:
    value = _nat(text)
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return value


def _n_list(text: str) -> list[int]:
    try:
        values = [_nat(part) for part in text.split(",") if part != ""]
    except argparse.ArgumentTypeError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of naturals") from None
    if not values:
        raise argparse.ArgumentTypeError("need at least one n")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geode4",
        description="Exact subdivision counts, Geode numbers and diagonals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hc", help="count subdivisions with census m2 m3 m4 m5")
    for name in ("m2", "m3", "m4", "m5"):
        p.add_argument(name, type=_nat)
    p.set_defaults(func=cmd_hc)

    p = sub.add_parser("geode", help="one Geode entry by memoized recursion")
    for name in ("m2", "m3", "m4", "m5"):
        p.add_argument(name, type=_nat)
    p.set_defaults(func=cmd_geode)

    p = sub.add_parser("diag", help="H(n): the Geode entry at [n,n,n,n], by slices")
    p.add_argument("n", type=_nat)
    p.add_argument("--checkpoint", metavar="DIR", help="checkpoint directory (resume if nonempty)")
    p.add_argument("--cadence", type=_positive, default=1, metavar="K",
                   help="save every K-th slice (default 1)")
    p.add_argument("--workers", type=_positive, default=1, metavar="W",
                   help="threads per slice (default 1)")
    p.add_argument("--out", metavar="FILE", help="also write the result block to FILE")
    p.set_defaults(func=cmd_diag)

    p = sub.add_parser("oracle", help="cross-check the series oracle against the fast paths")
    p.add_argument("--degree", type=_positive, required=True, metavar="D",
                   help="total-degree cap for the series")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("enum", help="count trees with the given census by brute force")
    for name in ("m2", "m3", "m4", "m5"):
        p.add_argument(name, type=_nat)
    p.add_argument("--budget", type=_positive, default=DEFAULT_COUNT_BUDGET,
                   help=f"refuse counts above this (default {DEFAULT_COUNT_BUDGET})")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("layer", help="totals across all censuses with F faces")
    p.add_argument("faces", type=_nat, metavar="F")
    p.add_argument("--monomials", action="store_true",
                   help="count distinct censuses instead of trees")
    p.set_defaults(func=cmd_layer)

    p = sub.add_parser("bench", help="time diagonal runs per slice and per backend")
    p.add_argument("ns", type=_n_list, metavar="N1,N2,...")
    p.add_argument("--csv", metavar="FILE", help="write rows to FILE instead of stdout")
    p.add_argument("--backend", choices=("auto", "py", "cext", "both"), default="both",
                   help="kernel backend(s) to time (default both)")
    p.set_defaults(func=cmd_bench)

    return parser


def cmd_hc(args) -> int:
    print(hyper_catalan((args.m2, args.m3, args.m4, args.m5)))
    return 0


def cmd_geode(args) -> int:
    print(geode_element((args.m2, args.m3, args.m4, args.m5), GeodeMemo()))
    return 0


def cmd_diag(args) -> int:
    config = RunConfig(
        n=args.n,
        checkpoint_dir=args.checkpoint,
        cadence=args.cadence,
        workers=args.workers,
        out_path=args.out,
    )

    def progress(s, seconds, digits):
        print(f"slice {s}/{args.n}: {seconds:.3f}s, corner has {digits} digits", file=sys.stderr)

    t0 = time.perf_counter()
    value = run_diagonal(config, progress=progress)
    print(f"total {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    print("\n".join(summary_lines(args.n, value)))
    return 0


def cmd_oracle(args) -> int:
    degree = args.degree
    failures = 0

    def report(ok, name):
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        failures += 0 if ok else 1

    series = series_solve(degree)
    report(verify_geometric_zero(series), f"defining identity holds through degree {degree}")

    ok = True
    for m in _vectors_up_to(degree):
        if coefficient(series, m) != hyper_catalan(m):
            ok = False
            break
    report(ok, "series coefficients match the closed form")

    try:
        quotient = divide_by_s1(series)
    except InexactDivisionError:
        report(False, "first-layer factor divides exactly")
        report(False, "quotient matches the recurrence")
    else:
        report(True, "first-layer factor divides exactly")
        memo = GeodeMemo()
        ok = True
        for m in _vectors_up_to(degree - 1):
            if coefficient(quotient, m) != geode_element(m, memo):
                ok = False
                break
        report(ok, "quotient matches the recurrence")

    ok = True
    for faces in range(degree + 1):
        by_series = sum(c for e, c in series.coeffs.items() if sum(e) == faces)
        if by_series != face_layer_count(faces):
            ok = False
            break
    report(ok, "per-face-count totals match the series")

    return 1 if failures else 0


def _vectors_up_to(cap):
    for total in range(cap + 1):
        for m2 in range(total + 1):
            for m3 in range(total - m2 + 1):
                for m4 in range(total - m2 - m3 + 1):
                    yield (m2, m3, m4, total - m2 - m3 - m4)


def cmd_enum(args) -> int:
    print(enumerate_count((args.m2, args.m3, args.m4, args.m5), budget=args.budget))
    return 0


def cmd_layer(args) -> int:
    if args.monomials:
        print(monomial_count(args.faces))
    else:
        print(face_layer_count(args.faces))
    return 0


def cmd_bench(args) -> int:
    rows = bench(args.ns, backend=args.backend,
                 progress=lambda n, name, wall: print(f"n={n} backend={name}: {wall:.3f}s", file=sys.stderr))
    if args.csv:
        with open(args.csv, "w", encoding="ascii", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(BENCH_COLUMNS)
            writer.writerows(rows)
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(BENCH_COLUMNS)
        writer.writerows(rows)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        InexactDivisionError,
        NonPositiveCellError,
        CheckpointFormatError,
        CheckpointMismatchError,
        BudgetExceededError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
