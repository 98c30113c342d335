"""Command line front end for ineqlab.

Usage:
    ineqlab [--seed N] [--output text|json|csv] [--out PATH] GROUP ACTION ...
    ineqlab means eval --kind power --alpha 0 --x 2 --y 8
    ineqlab certify --family log1p-le-x --samples 10000 --seed 42 --output json
    ineqlab complex curve --points 1000 --output csv

Exit codes: 0 on success, 1 when a check finds counterexamples, 2 on usage
or input errors.
"""

import argparse
import logging
import pathlib
import sys
from typing import Optional

from ..dataclass import (
    Certificate,
    InductionCheck,
    InequalityCheck,
    OutputFormat,
    RunConfig,
    SamplingStrategy,
    SLSweep,
    SLVerdict,
)
from ..env import LOG_LEVEL
from ..exceptions import InequalityLabException
from .output import render

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2

_CHECK_TYPES = (Certificate, InductionCheck, InequalityCheck, SLSweep, SLVerdict)
_GLOBAL_OPTIONS = ("command", "action", "seed", "output", "out_path")


def _add_common(parser: argparse.ArgumentParser, suppress: bool):
    # Leaf parsers only override the top-level values when given explicitly.
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument(
        "--seed", type=int, default=default(0), help="Sampling seed (default: 0)"
    )
    parser.add_argument(
        "--output",
        type=str,
        choices=[f.value for f in OutputFormat],
        default=default(OutputFormat.TEXT.value),
        help="Output format (default: text)",
    )
    parser.add_argument(
        "--out",
        dest="out_path",
        type=str,
        default=default(None),
        help="Also write the output to this file",
    )


def _add_mean_spec(parser: argparse.ArgumentParser):
    parser.add_argument("--kind", type=str, default="power", help="Mean family")
    parser.add_argument("--spec", type=str, default=None, help="Mean spec string")
    parser.add_argument("--alpha", type=float, default=1.0, help="Power order")
    parser.add_argument("--beta", type=float, default=1.0, help="Rado order")
    parser.add_argument("--u", type=float, default=1.0, help="Gini/Lehmer u")
    parser.add_argument("--v", type=float, default=0.0, help="Gini v")
    parser.add_argument("--a", type=float, default=0.5, help="First weight")
    parser.add_argument("--b", type=float, default=0.5, help="Second weight")


def _add_grid(parser: argparse.ArgumentParser, re=(-3.0, 3.0), im=(-2.0, 2.0)):
    parser.add_argument("--re-min", type=float, default=re[0])
    parser.add_argument("--re-max", type=float, default=re[1])
    parser.add_argument("--im-min", type=float, default=im[0])
    parser.add_argument("--im-max", type=float, default=im[1])
    parser.add_argument("--nx", type=int, default=60)
    parser.add_argument("--ny", type=int, default=41)


def _add_certify_options(parser: argparse.ArgumentParser):
    target = parser.add_mutually_exclusive_group()
    target.add_argument("--family", type=str, default=None, help="Family id")
    target.add_argument("--chain", type=str, default=None, help="Chain id")
    target.add_argument(
        "--prefix", type=str, default=None, help="Every family id with this prefix"
    )
    parser.add_argument("--samples", type=int, default=10**4)
    parser.add_argument(
        "--strategy",
        type=str,
        choices=[s.value for s in SamplingStrategy],
        default=None,
        help="Sampling strategy (default: per domain)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ineqlab",
        allow_abbrev=False,
        description="Numerical laboratory for classical inequalities",
    )
    _add_common(parser, suppress=False)
    subparsers = parser.add_subparsers(dest="command", help="Command groups")

    def group(name: str, description: str):
        p = subparsers.add_parser(name, help=description)
        return p.add_subparsers(dest="action", required=True, help="Actions")

    def leaf(actions, name: str, description: str):
        p = actions.add_parser(name, help=description, allow_abbrev=False)
        _add_common(p, suppress=True)
        return p

    # means
    means = group("means", "Two-argument means")
    p = leaf(means, "eval", "Evaluate a mean at (x, y)")
    _add_mean_spec(p)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p = leaf(means, "conjugate", "Evaluate xy / M(x, y)")
    _add_mean_spec(p)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p = leaf(means, "iterate", "Common limit of two interleaved means")
    p.add_argument("--m", type=str, default="power:1", help="First mean spec")
    p.add_argument("--n", type=str, default="power:0", help="Second mean spec")
    p.add_argument("--x0", type=float, required=True)
    p.add_argument("--y0", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-15)
    p = leaf(means, "rado-check", "Certify the Rado theorem bounds")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument(
        "--target", type=str, choices=["rado", "zadl", "agm"], default="rado"
    )
    p.add_argument("--samples", type=int, default=10**4)
    p = leaf(means, "profile", "Tabulate h(t) = M(1, e^t) / (1 + e^t)")
    _add_mean_spec(p)
    p.add_argument("--t-min", type=float, default=-5.0)
    p.add_argument("--t-max", type=float, default=5.0)
    p.add_argument("--points", type=int, default=101)

    # bounds
    bounds = group("bounds", "Logarithm and e bound families")
    p = leaf(bounds, "list", "List bound families")
    p.add_argument("--chains", action="store_true", help="List chains instead")
    p = leaf(bounds, "chain", "Evaluate every term of a chain at x")
    p.add_argument("--chain", type=str, required=True)
    p.add_argument("--x", type=float, required=True)
    p = leaf(bounds, "eps", "Exact shift function of a bound family")
    p.add_argument("--family", type=str, default="e_exponent")
    p.add_argument("--x", type=float, default=1.0)
    p.add_argument("--level", type=float, default=None, help="Solve eps(x) = level")
    p = leaf(bounds, "cf", "Continued fraction convergent of ln(1 + x)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=float, default=1.0)
    p = leaf(bounds, "certify", "Certify families by sampling")
    _add_certify_options(p)
    p = leaf(bounds, "sharpness", "Perturb the sharp constant of a family")
    p.add_argument("--family", type=str, required=True)
    p.add_argument("--deltas", type=str, required=True, help="e.g. 1.9,1.99,2")
    p.add_argument("--samples", type=int, default=10**4)

    # sums
    sums = group("sums", "Partial sums and their bounds")
    p = leaf(sums, "partial", "Partial sum S_n")
    p.add_argument("--model", type=str, default="harmonic")
    p.add_argument("--n", type=int, required=True)
    p = leaf(sums, "euler-constant", "Enclosure of the Euler type constant")
    p.add_argument("--model", type=str, default="harmonic")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--envelope", type=str, default=None)
    p = leaf(sums, "sl", "Check two-sided sum bound fixtures")
    p.add_argument("--fixture", type=str, default=None, help="Default: all")
    p.add_argument("--n-max", type=int, default=None)
    p = leaf(sums, "ak", "Harmonic expansion coefficient A_k")
    p.add_argument("--k", type=int, required=True)
    p = leaf(sums, "limits", "Extrapolated limits of the harmonic remainder")
    p.add_argument("--order", type=int, default=1)
    p.add_argument("--grid", type=str, default="1000,2000,4000,8000,16000")
    p = leaf(sums, "zeta-cont", "Continued zeta value for 0 < a < 1")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--n", type=int, default=10**6)

    # zeta
    zeta = group("zeta", "Bernoulli numbers and zeta values")
    p = leaf(zeta, "bernoulli", "Exact Bernoulli numbers B_0..B_m")
    p.add_argument("--upto", type=int, default=20)
    p = leaf(zeta, "even", "zeta(2n) and eta(2n) in closed form")
    p.add_argument("--n", type=int, required=True)
    p = leaf(zeta, "eta", "Alternating zeta eta(a)")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--terms", type=int, default=10**4)
    p.add_argument("--exact", action="store_true", help="Use (1 - 2^(1-a)) zeta(a)")
    p = leaf(zeta, "direct", "zeta(s) by summation with a tail correction")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--terms", type=int, default=10**4)

    # solve
    solve = group("solve", "Root finding and fixed points")
    for name, description in (
        ("bisect", "Bisection on [lo, hi]"),
        ("newton", "Newton iteration from x0"),
        ("fixed-point", "x <- x + lambda (g(x) - x)"),
        ("lambda", "Accelerating lambda = 1 / (1 - g'(x))"),
    ):
        p = leaf(solve, name, description)
        p.add_argument("--problem", type=str, required=True)
        p.add_argument("--level", type=float, default=0.4)
        if name == "bisect":
            p.add_argument("--lo", type=float, required=True)
            p.add_argument("--hi", type=float, required=True)
        if name in ("newton", "fixed-point"):
            p.add_argument("--x0", type=float, default=1.0)
            p.add_argument("--maxit", type=int, default=100)
        if name != "lambda":
            p.add_argument("--tol", type=float, default=1e-12)
        if name == "fixed-point":
            p.add_argument("--lam", type=float, default=1.0)
            p.add_argument("--optimal", action="store_true", help="lambda at x0")
        if name == "lambda":
            p.add_argument("--x", type=float, required=True)

    # young
    young = group("young", "Young inequality with swapped exponents")
    p = leaf(young, "compare", "Compare x^p/p + y^q/q with x^q/q + y^p/p")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--p", type=float, required=True)
    p = leaf(young, "critical", "y where both forms agree")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--p", type=float, required=True)

    # classic
    classic = group("classic", "Vector inequalities and induction fixtures")
    for name, description in (
        ("cb", "Cauchy-Bunyakovsky"),
        ("minkowski", "Minkowski"),
        ("holder", "Holder"),
    ):
        p = leaf(classic, name, description)
        p.add_argument("--u", type=str, required=True, help="e.g. 1,2,3")
        p.add_argument("--v", type=str, required=True)
        if name == "holder":
            p.add_argument("--p", type=float, default=2.0)
    p = leaf(classic, "induction", "Check induction fixtures")
    p.add_argument("--fixture", type=str, default=None, help="Default: all")
    p.add_argument("--n-max", type=int, default=None)

    # complex
    plane = group("complex", "Complex-plane regions")
    p = leaf(plane, "classify", "Region of a single point")
    p.add_argument("--z", type=str, required=True, help="e.g. -1+0.5j")
    p.add_argument(
        "--region", type=str, choices=["amgm", "amgm-modulus", "log"], default="amgm"
    )
    p = leaf(plane, "curve", "Boundary curve of the AM-GM region")
    p.add_argument("--points", type=int, default=1000)
    leaf(plane, "axes", "Holding intervals on the real and imaginary axes")
    p = leaf(plane, "log-scan", "Grid scan of |ln(1 + z)| <= |z|")
    _add_grid(p)
    p.add_argument("--rays", type=int, default=0)
    p.add_argument("--crossings", action="store_true", help="Output ray crossings")
    p = leaf(plane, "eps-sup", "Largest |eps(z)| on a grid")
    _add_grid(p)

    # certify
    p = subparsers.add_parser(
        "certify", help="Alias of bounds certify", allow_abbrev=False
    )
    _add_common(p, suppress=True)
    _add_certify_options(p)
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    params = {k: v for k, v in vars(args).items() if k not in _GLOBAL_OPTIONS}
    command = " ".join(c for c in (args.command, getattr(args, "action", None)) if c)
    return RunConfig(
        command=command,
        params=params,
        seed=args.seed,
        output=args.output,
        out_path=args.out_path,
    )


def _dispatch(args: argparse.Namespace):
    from . import commands

    if args.command == "means":
        return commands.cmd_means(args)
    elif args.command == "bounds":
        return commands.cmd_bounds(args)
    elif args.command == "sums":
        return commands.cmd_sums(args)
    elif args.command == "zeta":
        return commands.cmd_zeta(args)
    elif args.command == "solve":
        return commands.cmd_solve(args)
    elif args.command == "young":
        return commands.cmd_young(args)
    elif args.command == "classic":
        return commands.cmd_classic(args)
    elif args.command == "complex":
        return commands.cmd_complex(args)
    elif args.command == "certify":
        return commands.cmd_certify(args)
    raise ValueError(f"Unknown command {args.command}")


def exit_code(result) -> int:
    """1 when any check in the result failed."""
    checks = result if isinstance(result, list) else [result]
    for check in checks:
        if isinstance(check, _CHECK_TYPES) and not check.holds:
            return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def run(argv: Optional[list[str]] = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.command is None:
        parser.print_help(stderr)
        return EXIT_USAGE

    config = _run_config(args)
    _LOGGER.debug(f"run {config.command} seed={config.seed} params={config.params}")
    try:
        result = _dispatch(args)
    except (InequalityLabException, ArithmeticError, ValueError, TypeError) as e:
        print(f"ineqlab {config.command}: {type(e).__name__}: {e}", file=stderr)
        return EXIT_USAGE

    text = render(result, config.output)
    stdout.write(text)
    if config.out_path is not None:
        out_path = pathlib.Path(config.out_path)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        with open(out_path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    return exit_code(result)


def main():
    logging.basicConfig(level=LOG_LEVEL)
    sys.exit(run())


if __name__ == "__main__":
    main()
