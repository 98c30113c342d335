"""Asymptotics of the harmonic numbers and related constants.

S_n = C + ln n + 1/(2n) - sum_{k>=2} A_k / (n (n+1) ... (n+k-1)) with
A_k = (1/k) int_0^1 x (1-x) (2-x) ... (k-1-x) dx.
"""

import functools
import logging
import math
from typing import Optional, Sequence

import numpy as np

from ..dataclass import ConstantEnclosure, PnConstantDecomposition
from ..exceptions import DomainError, ParameterError
from ..helper import compensated_sum
from .extrapolate import stable_limit
from .models import euler_constant, partial_sum

_LOGGER = logging.getLogger(__name__)

EULER_GAMMA = float(np.euler_gamma)
PN_MIN_N = 10
CONTINUATION_MIN_N = 10
EULER_ESTIMATE_N = 10**4
EULER_ESTIMATE_ORDER = 6


def expansion_coefficient_A(k: int) -> float:
    """Gauss-Legendre quadrature, exact for the degree-k integrand."""
    if k < 1:
        raise ParameterError(f"Expansion index must be at least 1, got {k}")
    nodes, weights = np.polynomial.legendre.leggauss(k // 2 + 2)
    x = 0.5 * (nodes + 1.0)
    integrand = x.copy()
    for j in range(1, k):
        integrand *= j - x
    return float(0.5 * np.dot(weights, integrand)) / k


def harmonic_expansion(n: int, order: int = 4, constant: float = EULER_GAMMA) -> float:
    """C + ln n + 1/(2n) - sum_{k=2}^{order} A_k / (n (n+1) ... (n+k-1))."""
    if n < 1:
        raise ParameterError(f"Expansion needs n >= 1, got {n}")
    if order < 1:
        raise ParameterError(f"Expansion order must be at least 1, got {order}")
    terms = [constant, math.log(n), 0.5 / n]
    rising = float(n)
    for k in range(2, order + 1):
        rising *= n + k - 1
        terms.append(-expansion_coefficient_A(k) / rising)
    return compensated_sum(terms)


@functools.lru_cache(maxsize=8)
def euler_gamma_estimate(
    n: int = EULER_ESTIMATE_N, order: int = EULER_ESTIMATE_ORDER
) -> tuple[float, ConstantEnclosure]:
    """C = S_n - ln n - 1/(2n) + sum_k A_k / (n)_k, clamped into the
    harmonic enclosure at n. Returns the value and the enclosure."""
    enclosure = euler_constant("harmonic", n)
    value = compensated_sum(
        [partial_sum("harmonic", n), -harmonic_expansion(n, order, constant=0.0)]
    )
    value = min(max(value, enclosure.lower), enclosure.upper)
    _LOGGER.debug(f"euler constant n={n} value={value} width={enclosure.width}")
    return value, enclosure


def asymptotic_limit(
    order: int, n_grid: Sequence[int], constant: Optional[float] = None
) -> float:
    """Richardson limit of n (S_n - C - ln n), or of n^2 (S_n - C - ln n - 1/(2n)).

    The limits are 1/2 and -A_2 = -1/12. C defaults to euler_gamma_estimate().
    """
    if constant is None:
        constant, enclosure = euler_gamma_estimate()
        _LOGGER.info(f"euler constant={constant} enclosure_width={enclosure.width}")
    if order not in (1, 2):
        raise ParameterError(f"Asymptotic order must be 1 or 2, got {order}")
    n_grid = [int(n) for n in n_grid]
    if len(n_grid) < 3:
        raise ParameterError("Asymptotic limit needs at least three grid points")
    if any(b <= a for a, b in zip(n_grid, n_grid[1:])) or n_grid[0] < 1:
        raise ParameterError(f"Grid must be positive and increasing, got {n_grid}")
    values = []
    for n in n_grid:
        remainder = [partial_sum("harmonic", n), -constant, -math.log(n)]
        if order == 2:
            remainder.append(-0.5 / n)
        values.append(n**order * compensated_sum(remainder))
    limit = stable_limit([1.0 / n for n in n_grid], values)
    _LOGGER.info(f"asymptotic order={order} grid={n_grid} limit={limit}")
    return limit


def zeta_continuation(a: float, n: int) -> float:
    """sum_{k<=n} k^-a - n^(1-a)/(1-a) - n^-a/2, tending to zeta(a) for 0 < a < 1."""
    if not 0 < a < 1:
        raise DomainError(f"Continuation needs 0 < a < 1, got {a}")
    if n < CONTINUATION_MIN_N:
        raise ParameterError(f"Continuation needs n >= {CONTINUATION_MIN_N}")
    k = np.arange(1, n + 1, dtype=np.float64)
    terms = np.power(k, -a)
    return compensated_sum(
        [compensated_sum(terms), -(n ** (1 - a)) / (1 - a), -0.5 * n ** (-a)]
    )


def _a_tail(n: int) -> float:
    """sum_{k>n} (1/k - 1/sqrt(k(k+1))) as its integral less half the n-th term."""
    u = 1.0 / n
    root_minus_one = u / (math.sqrt(1.0 + u) + 1.0)
    integral = 2.0 * math.log1p(0.5 * root_minus_one)
    return integral - 0.5 * _a_term(n)


def _a_term(k: float) -> float:
    return 1.0 / (k * math.sqrt(k + 1) * (math.sqrt(k + 1) + math.sqrt(k)))


def a_series(n: int, tail: bool = True) -> tuple[float, float]:
    """A = sum 1/(k sqrt(k+1) (sqrt(k+1) + sqrt(k))); returns (value, error bound).

    Without the tail the value is the partial sum to n and the bound is the
    remaining sum.
    """
    if n < 1:
        raise ParameterError(f"A-series needs n >= 1, got {n}")
    k = np.arange(1, n + 1, dtype=np.float64)
    root = np.sqrt(k + 1)
    partial = compensated_sum(1.0 / (k * root * (root + np.sqrt(k))))
    if not tail:
        return partial, _a_tail(n) + 0.5 * _a_term(n)
    return partial + _a_tail(n), 1.0 / (6.0 * float(n) ** 3)


def pn_constant_decomposition(
    n: int, euler_c: Optional[float] = None
) -> PnConstantDecomposition:
    """Euler constant C1 of sum 1/sqrt(k(k+1)) (envelope ln) against C - A."""
    if n < PN_MIN_N:
        raise ParameterError(f"Decomposition needs n >= {PN_MIN_N}, got {n}")
    enclosure = euler_constant("p", n, envelope="log")
    a_value, a_bound = a_series(n)
    result = PnConstantDecomposition(
        n=n,
        c1_estimate=enclosure.midpoint,
        c1_enclosure=enclosure,
        euler_c=EULER_GAMMA if euler_c is None else euler_c,
        a_value=a_value,
        a_tail_bound=a_bound,
    )
    _LOGGER.info(
        f"pn decomposition n={n} c1={result.c1_estimate} "
        f"c_minus_a={result.c_minus_a} agrees={result.agrees}"
    )
    return result
