"""Command-line entry point.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input,
3 a numerical method did not converge.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from .critical import Branch, critical_lattice, davis_constant, scaled_critical_determinant
from .errors import DomainError, MinkpackError, NoConvergence
from .lattice import Point2
from .report import REPORT_FIELDS, SweepSpec, cmd_report, cmd_sweep, dumps, jarnik_table, to_csv
from .shells import count_integer_points, solve_shell, theta_coefficients
from .svg import SvgSpec, render_svg
from .verification import run_verification

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_CONVERGENCE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _exponent(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity", "+inf"):
        return math.inf
    try:
        return float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minkpack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    rep = sub.add_parser("report", help="all constants for one (p, m)")
    rep.add_argument("--p", type=_exponent, required=True)
    rep.add_argument("--m", type=int, default=0)

    sw = sub.add_parser("sweep", help="tabulate report columns over a p grid")
    sw.add_argument("--p-from", type=float, required=True)
    sw.add_argument("--p-to", type=float, required=True)
    sw.add_argument("--steps", type=int, required=True)
    sw.add_argument("--m", type=int, default=0)
    sw.add_argument("--columns", default="p,delta",
                    help="comma-separated subset of: " + ",".join(REPORT_FIELDS))
    sw.add_argument("--format", choices=("csv", "json"), default="csv")

    ver = sub.add_parser("verify", help="run the independent checks")
    ver.add_argument("--p", type=_exponent, required=True)
    ver.add_argument("--m", type=int, default=0)
    ver.add_argument("--samples", type=int, default=1000)
    ver.add_argument("--seed", type=int, default=42)

    svg = sub.add_parser("svg", help="SVG diagram of the optimal packing")
    svg.add_argument("--p", type=_exponent, required=True)
    svg.add_argument("--m", type=int, default=0)
    svg.add_argument("--copies", type=int, default=3)
    svg.add_argument("--width", type=int, default=512)

    sub.add_parser("p0", help="print the Davis constant")

    th = sub.add_parser("theta", help="theta coefficients of x^2 - xy + y^2")
    th.add_argument("--max", type=int, required=True, dest="max_m")

    cnt = sub.add_parser("count", help="integer points on N * C_p for even p")
    cnt.add_argument("--p", type=int, required=True)
    cnt.add_argument("--N", type=int, required=True)
    cnt.add_argument("--table", action="store_true",
                     help="CSV of counts and Jarnik's leading term for 1..N")

    sh = sub.add_parser("shell", help="the six shell points of a critical lattice")
    sh.add_argument("--p", type=_exponent, required=True)
    sh.add_argument("--branch", type=int, choices=(0, 1), required=True)
    return parser


def _run(args: argparse.Namespace) -> tuple[str, int]:
    if args.verb == "report":
        return cmd_report(args.p, args.m), EXIT_OK
    if args.verb == "sweep":
        columns = tuple(c.strip() for c in args.columns.split(",") if c.strip())
        spec = SweepSpec(args.p_from, args.p_to, args.steps, args.m, columns)
        return cmd_sweep(spec, args.format), EXIT_OK
    if args.verb == "verify":
        if args.samples < 1:
            raise DomainError("samples must be positive")
        result = run_verification(args.p, args.m, args.samples, args.seed)
        doc = {
            "p": result.p,
            "m": result.m,
            "samples": args.samples,
            "seed": args.seed,
            "checks": [
                {"name": c.name, "passed": c.passed, "skipped": c.skipped, **c.details}
                for c in result.checks
            ],
            "passed": result.passed,
        }
        return dumps(doc) + "\n", EXIT_OK if result.passed else EXIT_CHECK_FAILED
    if args.verb == "svg":
        return render_svg(SvgSpec(args.p, args.m, args.copies, args.width)), EXIT_OK
    if args.verb == "p0":
        return dumps({"p0": davis_constant()}) + "\n", EXIT_OK
    if args.verb == "theta":
        return dumps({"max": args.max_m, "coefficients": theta_coefficients(args.max_m)}) + "\n", EXIT_OK
    if args.verb == "count":
        if args.table:
            rows = jarnik_table(args.p, args.N)
            return to_csv(("N", "count", "length", "jarnik_leading"), rows), EXIT_OK
        return dumps({"p": args.p, "N": args.N,
                      "count": count_integer_points(args.p, args.N)}) + "\n", EXIT_OK
    if args.verb == "shell":
        branch = Branch(args.branch)
        L = critical_lattice(args.p, branch)
        d = abs(L.signed_det)
        shell = solve_shell(args.p, L.b1, d)
        doc = {"p": args.p, "branch": int(branch), "lattice_det": d,
               "points": [[q.x, q.y] for q in shell.points]}
        return dumps(doc) + "\n", EXIT_OK
    raise DomainError(f"unknown verb {args.verb}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = _run(args)
    except _UsageError as exc:
        print(f"minkpack: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NoConvergence as exc:
        print(f"minkpack: no convergence: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except MinkpackError as exc:
        print(f"minkpack: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
