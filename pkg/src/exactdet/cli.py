"""Command-line front end.

Subcommands:

* ``det <file>``    -- determinant of a matrix file, with method selection,
  trace dump and operation counting;
* ``bench``         -- condensation vs. cofactor operation-count table over
  seeded random integer matrices;
* ``huckel``        -- pi-system energy levels from a chain length or an
  edge file.

Exit codes: 0 success, 2 parse/argument error, 3 non-square matrix,
4 condensation gave up under --method condense, 5 root finding failed.
"""

from __future__ import annotations

import argparse
import sys

from .condense import FallbackRequired, OpCount, condensation_det, render_trace
from .huckel import (
    NoConvergence,
    PiSystem,
    energy_levels,
    secular_polynomial,
    symbolic_form,
)
from .matrix import ParseError, parse_matrix
from .oracle import bareiss_det, cofactor_det, count_ratio
from .ring import _frac_str, format_scalar

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_SQUARE = 3
EXIT_FALLBACK = 4
EXIT_NO_CONVERGENCE = 5


def _sizes(text: str):
    a, sep, b = text.partition("..")
    if not sep:
        b = a
    try:
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactdet",
        description="Exact determinants by condensation, with oracles and a Hückel solver.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_det = sub.add_parser("det", help="determinant of a matrix file")
    p_det.add_argument("file", help="matrix file (see README for the format)")
    p_det.add_argument(
        "--method",
        choices=["condense", "cofactor", "bareiss", "auto"],
        default="auto",
    )
    p_det.add_argument("--trace", action="store_true", help="print the condensation trace")
    p_det.add_argument("--count-ops", action="store_true", help="print operation tallies")

    p_bench = sub.add_parser("bench", help="operation-count comparison table")
    p_bench.add_argument("--sizes", type=_sizes, default=(3, 6), metavar="A..B")
    p_bench.add_argument("--trials", type=int, default=10)
    p_bench.add_argument("--seed", type=int, default=0)

    p_h = sub.add_parser("huckel", help="pi-system energy levels")
    group = p_h.add_mutually_exclusive_group(required=True)
    group.add_argument("--chain", type=int, metavar="N", help="linear chain of N atoms")
    group.add_argument("--edges", metavar="FILE", help="edge file (atoms/edge lines)")
    p_h.add_argument("--alpha", type=float, required=True)
    p_h.add_argument("--beta", type=float, required=True)
    p_h.add_argument("--show-poly", action="store_true", help="print the symbolic form")
    p_h.add_argument("--tol", type=float, default=1e-10)
    return parser


def cmd_det(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            matrix = parse_matrix(fh.read())
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as e:
        print(f"error: {args.file}: {e}", file=sys.stderr)
        return EXIT_PARSE
    if not matrix.is_square:
        print(
            f"error: {args.file}: matrix is {matrix.n_rows}x{matrix.n_cols}, not square",
            file=sys.stderr,
        )
        return EXIT_NOT_SQUARE

    trace = None
    ops = OpCount()
    if args.method in ("condense", "auto"):
        try:
            det, trace = condensation_det(matrix)
            ops = trace.ops
        except FallbackRequired as e:
            if args.method == "condense":
                print(f"error: condensation gave up: {e}", file=sys.stderr)
                return EXIT_FALLBACK
            det = bareiss_det(matrix, ops)
            print("method: bareiss (condensation fallback)", file=sys.stderr)
    elif args.method == "cofactor":
        det = cofactor_det(matrix, ops)
    else:
        det = bareiss_det(matrix, ops)

    print(format_scalar(det))
    if trace is not None and trace.division_warning:
        print("warning: a division used a divisor close to the zero tolerance", file=sys.stderr)
    if args.trace:
        if trace is not None:
            print(render_trace(trace), end="")
        else:
            print(f"trace: not available for method {args.method}", file=sys.stderr)
    if args.count_ops:
        print(f"mults: {ops.mults}")
        print(f"divs: {ops.divs}")
        print(f"adds: {ops.adds}")
    return EXIT_OK


def cmd_bench(args) -> int:
    lo, hi = args.sizes
    if not (3 <= lo <= hi <= 10):
        print(f"error: sizes must lie in 3..10, got {lo}..{hi}", file=sys.stderr)
        return EXIT_PARSE
    if args.trials < 1:
        print("error: trials must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    header = (
        f"{'n':>3} {'trials':>7} {'condense_ops':>13} "
        f"{'cofactor_ops':>13} {'ratio':>8} {'regen':>6}"
    )
    print(header)
    for n in range(lo, hi + 1):
        r = count_ratio(n, args.trials, args.seed)
        print(
            f"{r.n:>3} {r.trials:>7} {r.condensation_ops:>13.1f} "
            f"{r.cofactor_ops:>13.1f} {r.ratio:>8.4f} {r.regenerated:>6}"
        )
    return EXIT_OK


def cmd_huckel(args) -> int:
    if args.beta == 0.0:
        print("error: beta must be nonzero", file=sys.stderr)
        return EXIT_PARSE
    if args.tol <= 0:
        print("error: tol must be positive", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.chain is not None:
            if args.chain < 1:
                print("error: chain length must be >= 1", file=sys.stderr)
                return EXIT_PARSE
            system = PiSystem.chain(args.chain)
        else:
            with open(args.edges, "r", encoding="utf-8") as fh:
                system = PiSystem.from_text(fh.read())
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as e:
        print(f"error: {args.edges}: {e}", file=sys.stderr)
        return EXIT_PARSE

    if args.alpha >= 0 or args.beta >= 0:
        print(
            "warning: alpha and beta are physically negative; proceeding anyway",
            file=sys.stderr,
        )
    sp = secular_polynomial(system)
    print(f"polynomial: {sp.coeffs}")
    coeff_list = list(sp.coeffs.coeffs)
    print("coefficients:", " ".join(_frac_str(c) for c in coeff_list))
    print(f"method: {sp.method}")
    if args.show_poly:
        print(f"symbolic: {symbolic_form(sp)}")
    try:
        levels = energy_levels(system, args.alpha, args.beta, tol=args.tol)
    except NoConvergence as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    print("energy levels:")
    for e in levels:
        print(repr(e))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "det":
        return cmd_det(args)
    if args.command == "bench":
        return cmd_bench(args)
    return cmd_huckel(args)


if __name__ == "__main__":
    sys.exit(main())
