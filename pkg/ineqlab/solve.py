import logging
import math
from typing import Callable, Optional

from .dataclass import SolveTrace
from .exceptions import (
    DerivativeSingular,
    DerivativeZero,
    Divergence,
    NoBracket,
    NoConvergence,
)

_LOGGER = logging.getLogger(__name__)

ScalarMap = Callable[[float], float]

_HULL_FACTOR = 1e6
_SINGULAR_TOLERANCE = 1e-8
_REFINE_BISECTIONS = 8


def _same_sign(a: float, b: float) -> bool:
    return (a > 0 and b > 0) or (a < 0 and b < 0)


def bisect(
    f: ScalarMap, lo: float, hi: float, tol: float = 1e-12, maxit: int = 200
) -> SolveTrace:
    """Halves [lo, hi] until its width is at most tol.

    The final iterate is the midpoint of the last bracket. Brackets stop
    shrinking once the midpoint rounds onto an end.
    """
    trace = SolveTrace(method="bisect", tolerance=tol)
    lo, hi = float(min(lo, hi)), float(max(lo, hi))
    flo, fhi = f(lo), f(hi)
    if flo == 0 or fhi == 0:
        trace.iterates.append(lo if flo == 0 else hi)
        trace.converged = True
        trace.residual = 0.0
        return trace
    if _same_sign(flo, fhi):
        raise NoBracket(
            f"f({lo})={flo} and f({hi})={fhi} have the same sign", trace
        )
    for _ in range(maxit):
        mid = 0.5 * (lo + hi)
        trace.iterates.append(mid)
        trace.iterations += 1
        if mid <= lo or mid >= hi:
            break
        fmid = f(mid)
        if fmid == 0:
            lo = hi = mid
            break
        if _same_sign(fmid, flo):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
        if hi - lo <= tol:
            break
    trace.residual = hi - lo
    if trace.residual > tol and (lo < 0.5 * (lo + hi) < hi):
        raise NoConvergence(
            f"Bisection bracket {trace.residual} after {maxit}", trace
        )
    trace.iterates.append(0.5 * (lo + hi))
    trace.converged = True
    _LOGGER.debug(f"bisect root={trace.root} iterations={trace.iterations}")
    return trace


def refine_root(
    f: ScalarMap, lo: float, hi: float, tol: float = 1e-13, maxit: int = 100
) -> SolveTrace:
    """Bracketed root search: a few bisections, then Illinois false position.

    Every iterate stays inside a bracket with a sign change.
    """
    trace = SolveTrace(method="refine", tolerance=tol)
    a, b = float(lo), float(hi)
    fa, fb = f(a), f(b)
    if fa == 0 or fb == 0:
        trace.iterates.append(a if fa == 0 else b)
        trace.converged = True
        trace.residual = 0.0
        return trace
    if _same_sign(fa, fb):
        raise NoBracket(f"f({a})={fa} and f({b})={fb} have the same sign", trace)
    for _ in range(_REFINE_BISECTIONS):
        mid = 0.5 * (a + b)
        fmid = f(mid)
        trace.iterates.append(mid)
        trace.iterations += 1
        if fmid == 0:
            trace.converged = True
            trace.residual = 0.0
            return trace
        if _same_sign(fmid, fa):
            a, fa = mid, fmid
        else:
            b, fb = mid, fmid
    # Illinois: the retained end's value is halved so it cannot stall.
    for _ in range(maxit):
        c = b - fb * (b - a) / (fb - fa)
        if not (min(a, b) < c < max(a, b)):
            c = 0.5 * (a + b)
        fc = f(c)
        trace.iterates.append(c)
        trace.iterations += 1
        step = abs(c - b)
        if _same_sign(fc, fb):
            fa *= 0.5
        else:
            a, fa = b, fb
        b, fb = c, fc
        trace.residual = abs(b - a)
        if fc == 0 or min(step, abs(b - a)) <= tol * max(1.0, abs(c)):
            trace.converged = True
            return trace
    raise NoConvergence(
        f"Root refinement bracket {trace.residual} after {maxit}", trace
    )


def newton(
    f: ScalarMap,
    df: ScalarMap,
    x0: float,
    tol: float = 1e-12,
    maxit: int = 100,
) -> SolveTrace:
    trace = SolveTrace(method="newton", iterates=[float(x0)], tolerance=tol)
    x = float(x0)
    for _ in range(maxit):
        fx, dfx = f(x), df(x)
        if fx == 0:
            trace.converged = True
            trace.residual = 0.0
            return trace
        if dfx == 0:
            raise DerivativeZero(f"Zero derivative at x={x}", trace)
        dx = fx / dfx
        x = x - dx
        trace.iterates.append(x)
        trace.iterations += 1
        trace.residual = abs(dx)
        if not math.isfinite(x):
            raise Divergence(f"Newton iterate left the reals after {x}", trace)
        if abs(dx) <= tol:
            trace.converged = True
            _LOGGER.debug(
                f"newton root={x} iterations={trace.iterations} "
                f"order={trace.estimated_order}"
            )
            return trace
    raise NoConvergence(f"Newton step {trace.residual} after {maxit}", trace)


def default_hull(x0: float) -> tuple[float, float]:
    if x0 > 0:
        return x0 / _HULL_FACTOR, x0 * _HULL_FACTOR
    if x0 < 0:
        return x0 * _HULL_FACTOR, x0 / _HULL_FACTOR
    return -_HULL_FACTOR, _HULL_FACTOR


def fixed_point(
    g: ScalarMap,
    x0: float,
    lam: float = 1.0,
    tol: float = 1e-12,
    maxit: int = 100,
    hull: Optional[tuple[float, float]] = None,
) -> SolveTrace:
    """Iterates x <- x + lam * (g(x) - x); lam = 1 is plain iteration.

    Leaving the hull (default x0/1e6 .. x0*1e6) raises Divergence.
    """
    lo, hi = default_hull(x0) if hull is None else hull
    trace = SolveTrace(method="fixed-point", iterates=[float(x0)], tolerance=tol)
    x = float(x0)
    for _ in range(maxit):
        try:
            step = lam * (g(x) - x)
        except (ValueError, ZeroDivisionError, OverflowError) as e:
            raise Divergence(f"Iteration map failed at x={x}: {e}", trace) from e
        x = x + step
        trace.iterates.append(x)
        trace.iterations += 1
        trace.residual = abs(step)
        if not math.isfinite(x) or not lo <= x <= hi:
            raise Divergence(f"Iterate {x} left the hull [{lo}, {hi}]", trace)
        if abs(step) <= tol:
            trace.converged = True
            _LOGGER.debug(
                f"fixed_point root={x} iterations={trace.iterations} lam={lam}"
            )
            return trace
    raise NoConvergence(f"Fixed-point step {trace.residual} after {maxit}", trace)


def central_difference(g: ScalarMap, x: float) -> float:
    h = 1e-6 * max(1.0, abs(x))
    return (g(x + h) - g(x - h)) / (2 * h)


def optimal_lambda(g: ScalarMap, x: float) -> float:
    """lam = 1 / (1 - g'(x)), cancelling the linear error term at x."""
    dg = central_difference(g, x)
    if abs(1.0 - dg) < _SINGULAR_TOLERANCE:
        raise DerivativeSingular(f"g'({x}) = {dg} is too close to 1")
    return 1.0 / (1.0 - dg)
