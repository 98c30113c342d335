"""Which of the two Young bounds on xy is tighter.

With h(t) = t^p/p - t^q/q the difference rhs_pq - rhs_qp is h(x) - h(y).
h has its extremum at t = 1, so when x and y lie on opposite sides of 1
the preference flips at the unique y_cr >= 1 with h(y_cr) = h(min(x, y)).
"""

import logging
import math
from typing import Optional

import numpy as np

from ..cert import certify, merge_certificates
from ..dataclass import (
    BoundFamily,
    Certificate,
    FamilyKey,
    Interval,
    YoungCase,
    YoungPreference,
    YoungVerdict,
)
from ..exceptions import NoBracket, ParameterError, SolverException
from ..solve import bisect, newton
from .vectors import conjugate_exponent

_LOGGER = logging.getLogger(__name__)

TIE_TOLERANCE = 1e-12
CRITICAL_TOLERANCE = 1e-13
_INITIAL_BRACKET = 10.0
_MAX_DOUBLINGS = 200

YOUNG_DOMAIN = [
    Interval(lo=0.0, hi=10.0, lo_closed=True, hi_closed=True),
    Interval(lo=0.0, hi=10.0, lo_closed=True, hi_closed=True),
    Interval(lo=1.0, hi=10.0, hi_closed=True),
]


def young_sides(x: float, y: float, p: float) -> tuple[float, float]:
    """(x^p/p + y^q/q, x^q/q + y^p/p)."""
    q = conjugate_exponent(p)
    return x**p / p + y**q / q, x**q / q + y**p / p


def _young_difference(t: float, p: float, q: float) -> float:
    return t**p / p - t**q / q


def young_critical_point(x: float, p: float) -> float:
    """y_cr >= 1 with x^p/p - x^q/q = y^p/p - y^q/q for 0 <= x <= 1.

    Newton from the right end of a sign-changing bracket, which converges
    monotonically since h is convex or concave on [1, inf); bisection
    takes over if Newton fails.
    """
    q = conjugate_exponent(p)
    if p == 2:
        raise ParameterError("With p = 2 both Young bounds coincide")
    if not 0 <= x <= 1:
        raise ParameterError(f"Critical point needs 0 <= x <= 1, got {x}")
    if x == 1:
        return 1.0
    target = _young_difference(x, p, q)

    def f(y: float) -> float:
        return _young_difference(y, p, q) - target

    def df(y: float) -> float:
        return y ** (p - 1) - y ** (q - 1)

    hi = _INITIAL_BRACKET
    f_lo = f(1.0)
    for _ in range(_MAX_DOUBLINGS):
        if f_lo * f(hi) <= 0:
            break
        hi *= 2
    else:
        raise NoBracket(f"No sign change of the critical equation for x={x}, p={p}")
    try:
        trace = newton(f, df, hi, tol=CRITICAL_TOLERANCE * hi)
        root = trace.root
        if not 1.0 <= root <= hi:
            raise NoBracket(f"Newton root {root} left [1, {hi}]", trace)
    except SolverException as e:
        _LOGGER.info(f"critical point x={x} p={p} newton failed: {e}")
        trace = bisect(f, 1.0, hi, tol=CRITICAL_TOLERANCE)
        root = trace.root
    _LOGGER.debug(f"critical point x={x} p={p} y_cr={root} method={trace.method}")
    return root


def _preference(rhs_pq: float, rhs_qp: float) -> YoungPreference:
    if abs(rhs_pq - rhs_qp) <= TIE_TOLERANCE * max(rhs_pq, rhs_qp):
        return YoungPreference.TIE
    return YoungPreference.PQ if rhs_pq < rhs_qp else YoungPreference.QP


def young_compare(x: float, y: float, p: float) -> YoungVerdict:
    q = conjugate_exponent(p)
    if not (x >= 0 and y >= 0 and math.isfinite(x) and math.isfinite(y)):
        raise ParameterError(f"Young needs finite x, y >= 0, got {x}, {y}")
    rhs_pq, rhs_qp = young_sides(x, y, p)
    lo, hi = min(x, y), max(x, y)
    y_cr: Optional[float] = None
    if lo >= 1:
        case = YoungCase.BOTH_AT_LEAST_ONE
    elif hi <= 1:
        case = YoungCase.BOTH_AT_MOST_ONE
    else:
        case = YoungCase.STRADDLE
        if p != 2:
            y_cr = young_critical_point(lo, p)
    return YoungVerdict(
        x=x,
        y=y,
        p=p,
        q=q,
        rhs_pq=rhs_pq,
        rhs_qp=rhs_qp,
        product=x * y,
        better=_preference(rhs_pq, rhs_qp),
        case=case,
        y_cr=y_cr,
    )


def _young_family(variant: str) -> BoundFamily:
    def rhs(x: np.ndarray, y: np.ndarray, p: np.ndarray) -> np.ndarray:
        q = p / (p - 1.0)
        if variant == "pq":
            return x**p / p + y**q / q
        return x**q / q + y**p / p

    return BoundFamily(
        key=FamilyKey(tag="young", variant=variant),
        statement=f"xy <= young {variant} bound",
        lhs=lambda x, y, p: x * y,
        rhs=rhs,
        domain=YOUNG_DOMAIN,
    )


def check_young_validity(samples: int = 10**5, seed: int = 0) -> Certificate:
    """Certifies xy <= rhs_pq and xy <= rhs_qp on random (x, y, p)."""
    certs = [
        certify(_young_family(variant), samples=samples, seed=seed)
        for variant in ("pq", "qp")
    ]
    return merge_certificates("young", certs)
