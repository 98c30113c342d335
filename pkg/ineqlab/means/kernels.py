"""Vectorized two-argument mean kernels.

Each kernel takes broadcastable arrays x, y >= 0 and returns the mean
values together with a mask of the points served by a limit formula.
Values are computed in log space relative to max(x, y) so that ratios
of 1e-300 and parameters of any size stay finite.
"""

import math

import numpy as np
from scipy.special import expit

from ..exceptions import DomainError, ParameterError
from ..helper import log_abs_expm1

POWER_LIMIT = 1e-7
RADO_LIMIT = 1e-7
GINI_LIMIT = 1e-7
DIAGONAL_LIMIT = 1e-8
_TINY = np.finfo(np.float64).tiny

Pair = tuple[np.ndarray, np.ndarray]


def _prepare(x, y) -> tuple[np.ndarray, np.ndarray]:
    x, y = np.broadcast_arrays(
        np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64)
    )
    if np.any(np.isnan(x)) or np.any(np.isnan(y)):
        raise DomainError("Mean arguments cannot be NaN")
    if np.any(x < 0) or np.any(y < 0):
        raise DomainError("Mean arguments must be nonnegative")
    return x, y


def _no_limit(x: np.ndarray) -> np.ndarray:
    return np.zeros(x.shape, dtype=bool)


def _require_positive(x: np.ndarray, y: np.ndarray, what: str):
    if np.any(x == 0) or np.any(y == 0):
        raise DomainError(f"{what} is undefined for zero arguments")


def _scaled(p: float, log_x: np.ndarray) -> np.ndarray:
    # 0 * log(0) is taken as 0, matching 0^0 = 1
    if p == 0:
        return np.zeros_like(log_x)
    return p * log_x


def power_mean(alpha: float, x, y) -> Pair:
    x, y = _prepare(x, y)
    hi, lo = np.maximum(x, y), np.minimum(x, y)
    if alpha == math.inf:
        return hi, _no_limit(hi)
    if alpha == -math.inf:
        return lo, _no_limit(lo)
    if alpha < 0:
        _require_positive(x, y, f"Power mean of order {alpha}")
    with np.errstate(all="ignore"):
        if abs(alpha) < POWER_LIMIT:
            d = np.log(hi) - np.log(lo)
            correction = np.where(lo > 0, alpha * d * d / 8.0, 0.0)
            product = hi * lo
            representable = np.isfinite(product) & (product >= _TINY)
            geometric = np.where(
                representable, np.sqrt(product), np.sqrt(hi) * np.sqrt(lo)
            )
            value = geometric * np.exp(correction)
            return np.where(lo > 0, value, 0.0), np.ones(hi.shape, dtype=bool)
        s = hi if alpha > 0 else lo
        t = (lo if alpha > 0 else hi) / s
        half = np.log1p(0.5 * np.expm1(alpha * np.log(t)))
        value = s * np.exp(half / alpha)
    return np.where(s > 0, value, 0.0), _no_limit(value)


def rado_generic(beta: float, x, y) -> np.ndarray:
    """((x^(b+1) - y^(b+1)) / ((b+1)(x-y)))^(1/b) away from the diagonal."""
    if beta == 0 or beta == -1:
        raise ParameterError(f"Rado mean of order {beta} has a closed form only")
    x, y = _prepare(x, y)
    hi, lo = np.maximum(x, y), np.minimum(x, y)
    with np.errstate(all="ignore"):
        u = np.log(lo) - np.log(hi)
        bracket = (
            log_abs_expm1((beta + 1) * u) - math.log(abs(beta + 1)) - log_abs_expm1(u)
        )
        return hi * np.exp(bracket / beta)


def rado_mean(beta: float, x, y) -> Pair:
    x, y = _prepare(x, y)
    hi, lo = np.maximum(x, y), np.minimum(x, y)
    if beta == math.inf:
        return hi, _no_limit(hi)
    if beta == -math.inf:
        return lo, _no_limit(lo)
    if beta == -2:
        return power_mean(0.0, x, y)[0], _no_limit(hi)
    if beta == 1:
        return 0.5 * (x + y), _no_limit(hi)
    if beta <= -1:
        _require_positive(x, y, f"Rado mean of order {beta}")
    with np.errstate(all="ignore"):
        u = np.log(lo) - np.log(hi)
        diagonal = (hi - lo) < DIAGONAL_LIMIT * hi
        near = hi * np.exp(0.5 * u + (beta + 2) * u * u / 24.0)
        if beta == 0:
            # identric mean
            log_ratio = np.where(lo > 0, -u / np.expm1(-u) - 1.0, -1.0)
            value, limit = hi * np.exp(log_ratio), _no_limit(hi)
        elif beta == -1:
            # logarithmic mean
            value, limit = hi * np.exp(log_abs_expm1(u) - np.log(-u)), _no_limit(hi)
        elif abs(beta) < RADO_LIMIT:
            c = 1.0 + 0.5 * beta
            value = hi * np.exp(u / -np.expm1(-c * u) - 1.0 / c)
            value = np.where(lo > 0, value, hi * np.exp(-1.0 / c))
            limit = np.ones(hi.shape, dtype=bool)
        else:
            value, limit = rado_generic(beta, x, y), _no_limit(hi)
        value = np.where(diagonal, near, value)
    value = np.where(hi > 0, value, 0.0)
    return value, limit | (diagonal & (hi > 0))


def gini_mean(u: float, v: float, x, y) -> Pair:
    x, y = _prepare(x, y)
    if min(u, v) < 0:
        _require_positive(x, y, f"Gini mean of orders ({u}, {v})")
    hi = np.maximum(x, y)
    with np.errstate(all="ignore"):
        lx, ly = np.log(x), np.log(y)
        if abs(u - v) < GINI_LIMIT:
            w = 0.5 * (u + v)
            p = expit(w * (lx - ly))
            if w == 0:
                log_value = 0.5 * (lx + ly)
            else:
                log_value = np.where(p > 0, p * lx, 0.0)
                log_value = log_value + np.where(p < 1, (1 - p) * ly, 0.0)
            value, limit = np.exp(log_value), np.ones(hi.shape, dtype=bool)
        else:
            top = np.logaddexp(_scaled(u, lx), _scaled(u, ly))
            bottom = np.logaddexp(_scaled(v, lx), _scaled(v, ly))
            value, limit = np.exp((top - bottom) / (u - v)), _no_limit(hi)
    return np.where(hi > 0, value, 0.0), limit


def lehmer_mean(u: float, x, y) -> Pair:
    return gini_mean(u + 1.0, u, x, y)


def heron_mean(x, y) -> Pair:
    x, y = _prepare(x, y)
    return (x + np.sqrt(x) * np.sqrt(y) + y) / 3.0, _no_limit(x)


def weighted_arith(a: float, b: float, x, y) -> Pair:
    x, y = _prepare(x, y)
    return a * x + b * y, _no_limit(x)


def weighted_geom(a: float, b: float, x, y) -> Pair:
    x, y = _prepare(x, y)
    return np.power(x, a) * np.power(y, b), _no_limit(x)
