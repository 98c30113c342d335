"""Handlers behind the ineqlab subcommands.

Each cmd_* takes the parsed arguments of one command group and returns the
result for the renderer. Library modules are imported on first use.
"""

import logging
import math

import numpy as np
import pandas as pd

from ..dataclass import MeanKind, MeanSpec, ScanGrid, SolveTrace
from ..exceptions import ParameterError

_LOGGER = logging.getLogger(__name__)


def parse_floats(text: str) -> list[float]:
    """Comma separated reals, e.g. "1,2.5,-3"."""
    try:
        return [float(v) for v in text.split(",") if v.strip() != ""]
    except ValueError as e:
        raise ParameterError(f"Expected comma separated numbers, got {text!r}") from e


def parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as e:
        raise ParameterError(f"Expected a complex number, got {text!r}") from e


def _mean_spec(args) -> MeanSpec:
    if args.spec is not None:
        return MeanSpec.from_string(args.spec)
    kind = MeanKind(args.kind)
    if kind == MeanKind.POWER:
        return MeanSpec.power(args.alpha)
    if kind == MeanKind.RADO:
        return MeanSpec.rado(args.beta)
    if kind == MeanKind.GINI:
        return MeanSpec.gini(args.u, args.v)
    if kind == MeanKind.LEHMER:
        return MeanSpec.lehmer(args.u)
    if kind == MeanKind.HERON:
        return MeanSpec.heron()
    if kind == MeanKind.WEIGHTED_ARITH:
        return MeanSpec.weighted_arith(args.a, args.b)
    if kind == MeanKind.WEIGHTED_GEOM:
        return MeanSpec.weighted_geom(args.a, args.b)
    raise ParameterError(f"Use --spec for {kind.value} means")


def _grid(args) -> ScanGrid:
    return ScanGrid(
        re_min=args.re_min,
        re_max=args.re_max,
        im_min=args.im_min,
        im_max=args.im_max,
        nx=args.nx,
        ny=args.ny,
    )


def _trace_summary(trace: SolveTrace) -> dict:
    return {
        "method": trace.method,
        "root": trace.root,
        "converged": trace.converged,
        "residual": trace.residual,
        "iterations": trace.iterations,
    }


def cmd_means(args):
    """Evaluate, iterate and certify two-argument means."""
    from ..means import (
        check_agm_enclosure,
        check_rado_bounds,
        check_zadl_bounds,
        iterate_mean,
        mean_conjugate,
        mean_eval,
        profile_values,
    )

    if args.action == "eval":
        return mean_eval(_mean_spec(args), args.x, args.y).value
    elif args.action == "conjugate":
        return mean_conjugate(_mean_spec(args), args.x, args.y)
    elif args.action == "iterate":
        m, n = MeanSpec.from_string(args.m), MeanSpec.from_string(args.n)
        mu, iterations = iterate_mean(m, n, args.x0, args.y0, tol=args.tol)
        return {"mu": mu, "iterations": iterations}
    elif args.action == "rado-check":
        if args.target == "zadl":
            return check_zadl_bounds(samples=args.samples, seed=args.seed)
        if args.target == "agm":
            return check_agm_enclosure(samples=args.samples, seed=args.seed)
        return check_rado_bounds(args.alpha, samples=args.samples, seed=args.seed)
    elif args.action == "profile":
        t = np.linspace(args.t_min, args.t_max, args.points)
        return pd.DataFrame({"t": t, "h": profile_values(_mean_spec(args), t)})
    raise ParameterError(f"Unknown means action {args.action}")


def _certify_bounds(args):
    from ..cert import certify
    from ..logbounds import certify_chain, certify_registry
    from ..registry import get_bound_family

    if args.chain is not None:
        return certify_chain(args.chain, samples=args.samples, seed=args.seed)
    if args.family is not None:
        return certify(
            get_bound_family(args.family),
            samples=args.samples,
            seed=args.seed,
            strategy=args.strategy,
        )
    return certify_registry(samples=args.samples, seed=args.seed, prefix=args.prefix)


def cmd_bounds(args):
    """Logarithm and e bound families, chains and their certificates."""
    from ..logbounds import (
        bound_registry,
        cf_convergent,
        cf_eval,
        eps_eval,
        eps_level_point,
        eval_chain,
    )

    if args.action == "list":
        if args.chains:
            from ..registry import get_chain_registry

            chains = get_chain_registry()
            return pd.DataFrame(
                [
                    {"id": c.id, "statement": c.statement}
                    for c in (chains[k] for k in sorted(chains))
                ]
            )
        return pd.DataFrame(
            [
                {
                    "id": f.id,
                    "statement": f.statement,
                    "domain": " x ".join(i.as_string() for i in f.domain),
                    "strict": f.strict,
                }
                for f in bound_registry()
            ]
        )
    elif args.action == "chain":
        rows = eval_chain(args.chain, args.x)
        return pd.DataFrame(rows, columns=["term", "value"])
    elif args.action == "eps":
        if args.level is not None:
            return eps_level_point(args.level)
        return eps_eval(args.family, args.x)
    elif args.action == "cf":
        convergent = cf_convergent(args.n)
        return {
            "n": args.n,
            "x": args.x,
            "value": cf_eval(args.n, args.x),
            "log1p": math.log1p(args.x),
            "p_coeffs": [str(c) for c in convergent.p_coeffs],
            "q_coeffs": [str(c) for c in convergent.q_coeffs],
        }
    elif args.action == "certify":
        return _certify_bounds(args)
    elif args.action == "sharpness":
        from ..cert import sharp_transition, sharpness_probe
        from ..logbounds import sharpness_knobs
        from ..registry import get_bound_family, perturb_family

        knobs = sharpness_knobs()
        if args.family not in knobs:
            raise ParameterError(
                f"Family {args.family} has no sharpness knob, "
                f"expected one of {sorted(knobs)}"
            )
        knob = knobs[args.family]
        rows = sharpness_probe(
            get_bound_family(args.family),
            lambda delta: perturb_family(knob, delta),
            parse_floats(args.deltas),
            samples=args.samples,
            seed=args.seed,
        )
        _LOGGER.info(f"family={args.family} transition={sharp_transition(rows)}")
        return pd.DataFrame(
            [
                {"delta": r.delta, "holds": r.holds, "worst_gap": r.worst_gap}
                for r in rows
            ]
        )
    raise ParameterError(f"Unknown bounds action {args.action}")


def cmd_certify(args):
    """Alias of bounds certify."""
    return _certify_bounds(args)


def cmd_sums(args):
    """Partial sums, Euler type constants and two-sided sum bounds."""
    from ..sums import (
        asymptotic_limit,
        check_fixture,
        euler_constant,
        euler_gamma_estimate,
        expansion_coefficient_A,
        fixture_registry,
        partial_sum,
        zeta_continuation,
    )

    if args.action == "partial":
        return partial_sum(args.model, args.n)
    elif args.action == "euler-constant":
        enclosure = euler_constant(args.model, args.n, envelope=args.envelope)
        return {
            "lower": enclosure.lower,
            "upper": enclosure.upper,
            "width": enclosure.upper - enclosure.lower,
            "n_used": enclosure.n_used,
        }
    elif args.action == "sl":
        if args.fixture is not None:
            return check_fixture(args.fixture, n_max=args.n_max)
        return [check_fixture(f, n_max=args.n_max) for f in fixture_registry()]
    elif args.action == "ak":
        return expansion_coefficient_A(args.k)
    elif args.action == "limits":
        constant, enclosure = euler_gamma_estimate()
        grid = [int(n) for n in parse_floats(args.grid)]
        return {
            "limit": asymptotic_limit(args.order, grid, constant=constant),
            "constant": constant,
            "constant_width": enclosure.width,
        }
    elif args.action == "zeta-cont":
        return zeta_continuation(args.a, args.n)
    raise ParameterError(f"Unknown sums action {args.action}")


def cmd_zeta(args):
    """Bernoulli numbers and zeta or eta values."""
    from ..zeta import (
        bernoulli,
        eta_direct,
        eta_even,
        eta_from_zeta,
        zeta_direct,
        zeta_direct_error_bound,
        zeta_even,
    )

    if args.action == "bernoulli":
        table = bernoulli(args.upto)
        return pd.DataFrame(
            {
                "k": list(range(table.upto + 1)),
                "numerator": [v.numerator for v in table.values],
                "denominator": [v.denominator for v in table.values],
                "value": [float(v) for v in table.values],
            }
        )
    elif args.action == "even":
        return {"n": args.n, "zeta": zeta_even(args.n), "eta": eta_even(args.n)}
    elif args.action == "eta":
        if args.exact:
            return eta_from_zeta(args.a)
        return eta_direct(args.a, terms=args.terms)
    elif args.action == "direct":
        return {
            "value": zeta_direct(args.s, terms=args.terms),
            "error_bound": zeta_direct_error_bound(args.s, terms=args.terms),
        }
    raise ParameterError(f"Unknown zeta action {args.action}")


def cmd_solve(args):
    """Root finding and fixed points on named problems."""
    from ..solve import bisect, central_difference, fixed_point, newton, optimal_lambda
    from .problems import get_problem

    problem = get_problem(args.problem, level=args.level)
    if args.action == "bisect":
        return _trace_summary(bisect(problem.f, args.lo, args.hi, tol=args.tol))
    elif args.action == "newton":
        df = problem.df
        if df is None:

            def df(x):
                return central_difference(problem.f, x)

        trace = newton(problem.f, df, args.x0, tol=args.tol, maxit=args.maxit)
        return _trace_summary(trace)
    elif args.action == "fixed-point":
        lam = args.lam
        if args.optimal:
            lam = optimal_lambda(problem.f, args.x0)
        trace = fixed_point(problem.f, args.x0, lam=lam, tol=args.tol, maxit=args.maxit)
        return {**_trace_summary(trace), "lambda": lam}
    elif args.action == "lambda":
        return optimal_lambda(problem.f, args.x)
    raise ParameterError(f"Unknown solve action {args.action}")


def cmd_young(args):
    """Young inequality comparisons."""
    from ..classic import young_compare, young_critical_point

    if args.action == "compare":
        return young_compare(args.x, args.y, args.p)
    elif args.action == "critical":
        return young_critical_point(args.x, args.p)
    raise ParameterError(f"Unknown young action {args.action}")


def cmd_classic(args):
    """Vector inequalities and induction fixtures."""
    from ..classic import (
        cauchy_bunyakovsky,
        check_induction,
        holder,
        induction_fixtures,
        minkowski,
    )

    if args.action == "induction":
        if args.fixture is not None:
            return check_induction(args.fixture, n_max=args.n_max)
        return [check_induction(f, n_max=args.n_max) for f in induction_fixtures()]
    u, v = np.array(parse_floats(args.u)), np.array(parse_floats(args.v))
    if args.action == "cb":
        return cauchy_bunyakovsky(u, v)
    elif args.action == "minkowski":
        return minkowski(u, v)
    elif args.action == "holder":
        return holder(u, v, args.p)
    raise ParameterError(f"Unknown classic action {args.action}")


def cmd_complex(args):
    """Complex-plane regions of the AM-GM and logarithm inequalities."""
    from ..complexregion import (
        amgm_classify,
        amgm_modulus_classify,
        axis_intervals,
        eps_complex_sup,
        log_region_classify,
        log_region_scan,
        polar_curve,
        quartic_residual,
        quartic_scale,
    )

    if args.action == "classify":
        z = parse_complex(args.z)
        classify = {
            "amgm": amgm_classify,
            "amgm-modulus": amgm_modulus_classify,
            "log": log_region_classify,
        }[args.region]
        verdict = classify(z)
        return {
            "re": z.real,
            "im": z.imag,
            "status": verdict.status.value,
            "residual": verdict.residual,
            "holds": verdict.holds,
        }
    elif args.action == "curve":
        rows = []
        for phi in np.linspace(-math.pi, math.pi, args.points, endpoint=False):
            for branch, r in zip(("inner", "outer"), polar_curve(float(phi))):
                s = complex(r * math.cos(phi), r * math.sin(phi))
                rows.append(
                    {
                        "phi": float(phi),
                        "branch": branch,
                        "re": s.real,
                        "im": s.imag,
                        "quartic": quartic_residual(s) / quartic_scale(s),
                    }
                )
        return pd.DataFrame(rows)
    elif args.action == "axes":
        real, imag = axis_intervals()
        return pd.DataFrame(
            [
                {"axis": axis, "interval": i.as_string(), "lo": i.lo, "hi": i.hi}
                for axis, intervals in (("real", real), ("imag", imag))
                for i in intervals
            ]
        )
    elif args.action == "log-scan":
        scan = log_region_scan(_grid(args), rays=args.rays)
        if args.crossings:
            return pd.DataFrame(
                [{"angle": c.angle, "radius": c.radius} for c in scan.crossings],
                columns=["angle", "radius"],
            )
        return pd.DataFrame(
            {
                "re": scan.re,
                "im": scan.im,
                "residual": scan.residual,
                "status": [s.value for s in scan.status],
            }
        )
    elif args.action == "eps-sup":
        sup, where = eps_complex_sup(_grid(args))
        return {"sup": sup, "re": where.re, "im": where.im}
    raise ParameterError(f"Unknown complex action {args.action}")
