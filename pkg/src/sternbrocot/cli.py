"""Command-line front end.

Every value crosses the boundary in an exact text format: rationals as
"p/q", elements of Q(sqrt5) as "a+b√5" (keywords tau, tau2 accepted),
continued fractions as "[0;a1,a2,...]" and "[[1;b1,b2,...]]". Sequence
output is TSV, sorted by value, so downstream golden-file comparisons
are bit-exact. Exit codes: 0 success, 1 verification failure, 2 usage
error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from .cf import expand_rcf, expand_rrcf
from .dist import MAX_XI_INDEX, verify_theorem1
from .exact import TAU2, QuadSurd, parse_quadsurd, parse_rational, to_decimal
from .singular import g_inductive, g_series, g_stream, g_tau2, question_mark
from .stern import stern_level
from .xi import theta, xi

DISPLAY_DIGITS = 15


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _lambda_arg(text: str) -> Fraction | QuadSurd:
    try:
        value = parse_quadsurd(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    return value.as_fraction() if value.is_rational else value


def _epsilon_arg(text: str) -> Fraction:
    try:
        return Fraction(text)  # accepts p/q, decimals, and exponent notation
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a tolerance: {text!r}") from exc


def _format_exact(value: Fraction | QuadSurd) -> str:
    return str(value)


def _emit_value(value: Fraction | QuadSurd) -> None:
    print(f"{_format_exact(value)}\t{to_decimal(value, DISPLAY_DIGITS)}")


def _check_cap(parser: argparse.ArgumentParser, n: int, cap: int, flag: str) -> None:
    if n < 0:
        parser.error(f"{flag} must be >= 0")
    if n > cap:
        parser.error(f"{flag} {n} exceeds the cap {cap}; raise --cap explicitly if you mean it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sternbrocot",
        description="Exact Stern-Brocot / reduced continued fraction toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser(
        "eval",
        help="evaluate the singular function g at a rational point",
        description="Prints the exact value (p/q or a+b√5) and a 15-digit decimal, tab-separated.",
    )
    p_eval.add_argument("--lambda", dest="lam", type=_lambda_arg, required=True,
                        help="split parameter in (0,1): p/q, a+b√5, tau or tau2")
    p_eval.add_argument("--x", type=_rational_arg, required=True, help="evaluation point in [0,1]")
    p_eval.add_argument("--route", choices=("inductive", "series", "tau2", "salem"),
                        default="series",
                        help="evaluation route (tau2 needs --lambda tau2, salem needs --lambda 1/2)")

    p_stream = sub.add_parser(
        "eval-stream",
        help="enclose g at an irrational point given by its partial quotients on stdin",
        description="Reads whitespace-separated partial quotients from stdin and prints "
                    "lo hi lo-decimal hi-decimal, tab-separated, with hi - lo < epsilon.",
    )
    p_stream.add_argument("--lambda", dest="lam", type=_lambda_arg, required=True)
    p_stream.add_argument("--epsilon", type=_epsilon_arg, required=True,
                          help="enclosure width, e.g. 1/1048576 or 1e-6")

    p_qm = sub.add_parser(
        "question-mark",
        help="evaluate Minkowski's ?(x) at a rational point",
        description="Prints the exact dyadic value and a 15-digit decimal, tab-separated.",
    )
    p_qm.add_argument("--x", type=_rational_arg, required=True, help="point in (0,1]")

    p_sb = sub.add_parser(
        "stern-brocot",
        help="emit a Stern-Brocot level as TSV",
        description="One line per element: numerator<TAB>denominator, increasing.",
    )
    p_sb.add_argument("--n", type=int, required=True, help="level index")
    p_sb.add_argument("--cap", type=int, default=22,
                      help="refuse levels above this index (default 22, ~4M elements)")

    p_xi = sub.add_parser(
        "xi",
        help="emit the reduced-fraction sequence xi(n) as TSV",
        description="One line per element: numerator<TAB>denominator<TAB>generation, "
                    "increasing; the endpoints 0 and 1 carry generation 0.",
    )
    p_xi.add_argument("--n", type=int, required=True, help="sequence index")
    p_xi.add_argument("--cap", type=int, default=25, help="refuse indices above this (default 25)")

    p_theta = sub.add_parser(
        "theta",
        help="emit one generation of the reduced-fraction tree as TSV",
        description="One line per element: numerator<TAB>denominator<TAB>generation, increasing.",
    )
    p_theta.add_argument("--k", type=int, required=True, help="generation index (>= 1)")
    p_theta.add_argument("--cap", type=int, default=25, help="refuse indices above this (default 25)")

    p_conv = sub.add_parser(
        "convert-cf",
        help="print both continued-fraction expansions of a rational",
        description="Line 1: regular expansion [0;a1,...]; line 2: reduced expansion [[1;b1,...]].",
    )
    p_conv.add_argument("--x", type=_rational_arg, required=True, help="point in (0,1)")

    p_verify = sub.add_parser(
        "verify",
        help="run a convergence verification",
        description="Exit code 0 on PASS, 1 on FAIL.",
    )
    verify_sub = p_verify.add_subparsers(dest="what", required=True)
    p_thm = verify_sub.add_parser(
        "theorem1",
        help="check that the xi empirical distribution converges to g at lambda = tau2",
        description="TSV rows: n, empirical p/q, exact target, |error| as a 30-digit decimal; "
                    "then a single PASS or FAIL line comparing the final error to --tol.",
    )
    p_thm.add_argument("--x", type=_rational_arg, required=True, help="point in (0,1)")
    p_thm.add_argument("--n-max", type=int, default=25,
                       help=f"largest sequence index (default 25, max {MAX_XI_INDEX})")
    p_thm.add_argument("--tol", type=_epsilon_arg, default=Fraction(1, 50),
                       help="tolerance on the final error (default 0.02)")

    p_plot = sub.add_parser(
        "plot-data",
        help="emit (x, g(x)) samples over the xi(grid) points as TSV",
        description="One line per point: x p/q, exact g, x decimal, g decimal.",
    )
    p_plot.add_argument("--lambda", dest="lam", type=_lambda_arg, required=True)
    p_plot.add_argument("--grid", type=int, required=True, help="xi sequence index to sample at")
    p_plot.add_argument("--cap", type=int, default=25, help="refuse grids above this (default 25)")

    return parser


def _cmd_eval(args: argparse.Namespace) -> int:
    x, lam = args.x, args.lam
    if not 0 <= x <= 1:
        raise ValueError(f"--x must lie in [0,1], got {x}")
    if args.route == "inductive":
        _emit_value(g_inductive(x, lam))
        return 0
    if x == 0:
        _emit_value(lam - lam)
        return 0
    cf = expand_rcf(x)
    if args.route == "series":
        _emit_value(g_series(cf, lam))
    elif args.route == "tau2":
        if lam != TAU2:
            raise ValueError("--route tau2 needs --lambda tau2")
        _emit_value(g_tau2(cf))
    else:  # salem
        if lam != Fraction(1, 2):
            raise ValueError("--route salem needs --lambda 1/2")
        _emit_value(question_mark(cf))
    return 0


def _cmd_eval_stream(args: argparse.Namespace) -> int:
    tokens = sys.stdin.read().split()
    quotients = (int(token) for token in tokens)
    lo, hi = g_stream(quotients, args.lam, args.epsilon)
    print(f"{_format_exact(lo)}\t{_format_exact(hi)}"
          f"\t{to_decimal(lo, DISPLAY_DIGITS)}\t{to_decimal(hi, DISPLAY_DIGITS)}")
    return 0


def _cmd_question_mark(args: argparse.Namespace) -> int:
    _emit_value(question_mark(expand_rcf(args.x)))
    return 0


def _cmd_stern_brocot(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _check_cap(parser, args.n, args.cap, "--n")
    for element in stern_level(args.n).elements:
        print(f"{element.numerator}\t{element.denominator}")
    return 0


def _cmd_xi(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.n < 1:
        parser.error("--n must be >= 1")
    _check_cap(parser, args.n, args.cap, "--n")
    levels = {node.value: node.level for k in range(1, args.n + 1) for node in theta(k)}
    for element in xi(args.n).elements:
        print(f"{element.numerator}\t{element.denominator}\t{levels.get(element, 0)}")
    return 0


def _cmd_theta(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.k < 1:
        parser.error("--k must be >= 1")
    _check_cap(parser, args.k, args.cap, "--k")
    for node in theta(args.k):
        print(f"{node.value.numerator}\t{node.value.denominator}\t{node.level}")
    return 0


def _cmd_convert_cf(args: argparse.Namespace) -> int:
    if not 0 < args.x < 1:
        raise ValueError(f"--x must lie in (0,1), got {args.x}")
    print(expand_rcf(args.x))
    print(expand_rrcf(args.x))
    return 0


def _cmd_verify_theorem1(args: argparse.Namespace) -> int:
    report = verify_theorem1(args.x, args.n_max, args.tol)
    target = _format_exact(report.target)
    for row in report.rows:
        print(f"{row.n}\t{row.empirical}\t{target}\t{row.abs_error_decimal}")
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def _cmd_plot_data(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.grid < 1:
        parser.error("--grid must be >= 1")
    _check_cap(parser, args.grid, args.cap, "--grid")
    lam = args.lam
    use_tau2 = lam == TAU2
    for x in xi(args.grid).elements:
        if x == 0:
            g = lam - lam
        else:
            cf = expand_rcf(x)
            g = g_tau2(cf) if use_tau2 else g_series(cf, lam)
        print(f"{x}\t{_format_exact(g)}\t{to_decimal(x, DISPLAY_DIGITS)}\t{to_decimal(g, DISPLAY_DIGITS)}")
    return 0


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code or 0)
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "eval-stream":
            return _cmd_eval_stream(args)
        if args.command == "question-mark":
            return _cmd_question_mark(args)
        if args.command == "stern-brocot":
            return _cmd_stern_brocot(args, parser)
        if args.command == "xi":
            return _cmd_xi(args, parser)
        if args.command == "theta":
            return _cmd_theta(args, parser)
        if args.command == "convert-cf":
            return _cmd_convert_cf(args)
        if args.command == "verify":
            return _cmd_verify_theorem1(args)
        if args.command == "plot-data":
            return _cmd_plot_data(args, parser)
        raise AssertionError(f"unhandled command {args.command!r}")
    except SystemExit as exc:  # parser.error inside a handler
        return int(exc.code or 0)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
