"""Deviation functions eps(x) that turn a logarithm bound into an identity.

Each family fixes eps by one equation in x, e.g. e_exponent solves
ln(1 + 1/x) = 1 / (x + eps). Values near the cancellation regions are
taken from stable rewrites rather than the defining formula.
"""

import math
from enum import Enum

from ..exceptions import DomainError, ParameterError, RangeError
from ..helper import compensated_sum
from ..solve import refine_root

# 1/ln(1 + z) = 1/z + sum G_k z^(k-1), Gregory coefficients G_1..G_6.
GREGORY_COEFFICIENTS = [0.5, -1 / 12, 1 / 24, -19 / 720, 3 / 160, -863 / 60480]
SERIES_CUTOFF = 1e3


class EpsFamily(Enum):
    LOG_SQRT = "log_sqrt"
    PADE2 = "pade2"
    E_EXPONENT = "e_exponent"
    SQRT_PAIR = "sqrt_pair"
    MID_PAIR = "mid_pair"


def _e_exponent(x: float) -> float:
    if x >= SERIES_CUTOFF:
        z = 1.0 / x
        return compensated_sum([g * z**k for k, g in enumerate(GREGORY_COEFFICIENTS)])
    return 1.0 / math.log1p(1.0 / x) - x


def _log_sqrt(y: float) -> float:
    """y^2 / ln^2(1 + y) - y, i.e. ln(1 + y) = y / sqrt(y + eps)."""
    if y <= 1.0 / SERIES_CUTOFF:
        # y / ln(1 + y) = 1 + sum G_k y^k
        ratio = 1.0 + compensated_sum(
            [g * y ** (k + 1) for k, g in enumerate(GREGORY_COEFFICIENTS)]
        )
        return (ratio - 1.0) * (ratio + 1.0) + 1.0 - y
    return (y / math.log1p(y)) ** 2 - y


def _pade2(x: float) -> float:
    """2x / ln(1 + x) - x, i.e. ln(1 + x) = 2x / (x + eps)."""
    if x <= 1.0 / SERIES_CUTOFF:
        series = compensated_sum(
            [g * x ** (k + 1) for k, g in enumerate(GREGORY_COEFFICIENTS)]
        )
        return 2.0 + 2.0 * series - x
    return 2.0 * x / math.log1p(x) - x


def _sqrt_pair(x: float) -> float:
    """Nonnegative root of ln^2(1 + 1/x) = 1 / ((x + 1)(x + eps)).

    With 1/ln(1 + 1/x) = x + e, the root is (e^2 - x (1 - 2e)) / (x + 1).
    """
    e = _e_exponent(x)
    return max(0.0, (e * e - x * (1.0 - 2.0 * e)) / (x + 1.0))


def _mid_pair(x: float) -> float:
    """Nonnegative root of (x + 1/2) / ((x + 1/2)^2 - eps^2) = ln(1 + 1/x).

    With 1/ln(1 + 1/x) = x + e the root is sqrt((x + 1/2)(1/2 - e)).
    """
    e = _e_exponent(x)
    return math.sqrt(max(0.0, (x + 0.5) * (0.5 - e)))


_EVALUATORS = {
    EpsFamily.LOG_SQRT: _log_sqrt,
    EpsFamily.PADE2: _pade2,
    EpsFamily.E_EXPONENT: _e_exponent,
    EpsFamily.SQRT_PAIR: _sqrt_pair,
    EpsFamily.MID_PAIR: _mid_pair,
}


def eps_eval(family: EpsFamily | str, x: float) -> float:
    family = EpsFamily(family)
    if not x > 0:
        raise DomainError(f"eps {family.value} needs x > 0, got {x}")
    if math.isinf(x):
        raise DomainError(f"eps {family.value} needs a finite x")
    return _EVALUATORS[family](float(x))


def eps_defect(family: EpsFamily | str, x: float, eps: float) -> float:
    """Residual of the defining equation of family at (x, eps)."""
    family = EpsFamily(family)
    if family == EpsFamily.LOG_SQRT:
        return math.log1p(x) - x / math.sqrt(x + eps)
    if family == EpsFamily.PADE2:
        return math.log1p(x) - 2.0 * x / (x + eps)
    log = math.log1p(1.0 / x)
    if family == EpsFamily.E_EXPONENT:
        return log - 1.0 / (x + eps)
    if family == EpsFamily.SQRT_PAIR:
        return log * log - 1.0 / ((x + 1.0) * (x + eps))
    return log - (x + 0.5) / ((x + 0.5) ** 2 - eps * eps)


def eps_taylor_bound(n: int, x: float) -> float:
    """1 / sum_{j<=n} (-1)^(j-1) / (j x^j) - x for x >= 1.

    Odd n bound eps_eval(e_exponent, x) from below, even n from above.
    """
    if n < 1:
        raise ParameterError(f"Taylor order must be at least 1, got {n}")
    if not x >= 1:
        raise DomainError(f"Taylor bound needs x >= 1, got {x}")
    x = float(x)
    # x * partial sum - 1, summed without the leading 1 that cancels
    defect = compensated_sum(
        [(-1) ** (j - 1) / (j * x ** (j - 1)) for j in range(2, n + 1)]
    )
    partial = (1.0 + defect) / x
    return -defect / partial


def eps_taylor_enclosure(n: int, x: float) -> tuple[float, float]:
    """(eps_{2n-1}(x), eps_{2n}(x)), enclosing eps_eval(e_exponent, x)."""
    return eps_taylor_bound(2 * n - 1, x), eps_taylor_bound(2 * n, x)


def eps_level_point(level: float = 0.4, tol: float = 1e-13) -> float:
    """Solves eps_eval(e_exponent, x) = level for x > 0."""
    if not 0 < level < 0.5:
        raise RangeError(f"e_exponent only takes values in (0, 1/2), got {level}")
    # solved in u = ln x; the root sits near exp(-1/level) for small levels
    lo = max(-2.0 / level, -690.0)
    hi = math.log(1.0 / (6.0 * (0.5 - level)) + 1.0)
    trace = refine_root(lambda u: _e_exponent(math.exp(u)) - level, lo, hi, tol=tol)
    return math.exp(trace.root)


def eps_reflected(x: float) -> float:
    """1/ln(1 + 1/x) - x for x < -1, via eps(-y) + eps(y - 1) = 1."""
    if not x < -1:
        raise DomainError(f"Reflected eps needs x < -1, got {x}")
    return 1.0 - _e_exponent(-float(x) - 1.0)
