"""Convergents R_n = P_n / Q_n of the continued fraction

    ln(1 + x) = x / (1 + 1x / (2 + 1x / (3 + 4x / (4 + 4x / (5 + ...))))).
"""

import functools
import logging

import mpmath
import numpy as np

from ..cert import certify, merge_certificates
from ..dataclass import BoundFamily, Certificate, Convergent, FamilyKey, Interval
from ..exceptions import DomainError, OverflowGuard, ParameterError

_LOGGER = logging.getLogger(__name__)

EXACT_LIMIT = 30
MAX_ORDER = 2000
EXTENDED_DIGITS = 60
ENCLOSURE_DOMAIN = [Interval(lo=0, hi=100, hi_closed=True)]


def _partial_numerator(k: int) -> int:
    """Coefficient of x in a_k: 1 for k = 1, m^2 for k in {2m, 2m + 1}."""
    if k == 1:
        return 1
    m = k // 2
    return m * m


def _shift_add(b: int, prev: list, a: int, prev2: list) -> list:
    """b * prev + a * x * prev2 on coefficient lists."""
    size = max(len(prev), len(prev2) + 1)
    result = [0] * size
    for i, c in enumerate(prev):
        result[i] += b * c
    for i, c in enumerate(prev2):
        result[i + 1] += a * c
    return result


@functools.lru_cache(maxsize=64)
def _exact_convergent(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    p_prev2, p_prev = [1], [0]
    q_prev2, q_prev = [0], [1]
    for k in range(1, n + 1):
        a = _partial_numerator(k)
        p_prev2, p_prev = p_prev, _shift_add(k, p_prev, a, p_prev2)
        q_prev2, q_prev = q_prev, _shift_add(k, q_prev, a, q_prev2)
    return tuple(p_prev), tuple(q_prev)


def _trim(coeffs: list) -> list:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    return coeffs


def cf_convergent(n: int) -> Convergent:
    if n < 0:
        raise ParameterError(f"Convergent index must be nonnegative, got {n}")
    if n > MAX_ORDER:
        raise OverflowGuard(f"Convergent {n} exceeds the supported order {MAX_ORDER}")
    p, q = _exact_convergent(n)
    p, q = _trim(list(p)), _trim(list(q))
    if n <= EXACT_LIMIT:
        return Convergent(n=n, p_coeffs=p, q_coeffs=q)
    # Rescale by the leading denominator term so the floats stay in range.
    with mpmath.workdps(EXTENDED_DIGITS):
        scale = mpmath.mpf(max(abs(c) for c in q))
        return Convergent(
            n=n,
            p_coeffs=[mpmath.mpf(c) / scale for c in p],
            q_coeffs=[mpmath.mpf(c) / scale for c in q],
            exact=False,
        )


def _polyval(coeffs: list, x: np.ndarray) -> np.ndarray:
    result = np.zeros_like(x)
    for c in reversed(coeffs):
        result = result * x + float(c)
    return result


def cf_values(n: int, x: np.ndarray) -> np.ndarray:
    """R_n on an array of arguments x > -1."""
    x = np.asarray(x, dtype=np.float64)
    convergent = cf_convergent(n)
    with np.errstate(all="ignore"):
        values = _polyval(convergent.p_coeffs, x) / _polyval(convergent.q_coeffs, x)
    if not np.all(np.isfinite(values[np.isfinite(x)])):
        raise OverflowGuard(f"Convergent {n} is not finite in double precision")
    return values


def cf_eval(n: int, x: float) -> float:
    if not x > -1:
        raise DomainError(f"Continued fraction needs x > -1, got {x}")
    convergent = cf_convergent(n)
    with mpmath.workdps(EXTENDED_DIGITS):
        p = mpmath.polyval(list(reversed(convergent.p_coeffs)), x)
        q = mpmath.polyval(list(reversed(convergent.q_coeffs)), x)
        if q == 0:
            raise OverflowGuard(f"Q_{n}({x}) vanishes")
        return float(p / q)


def _convergent_family(tag: str, lower: int, upper: int) -> BoundFamily:
    def lhs(x):
        return np.log1p(x) if lower < 0 else cf_values(lower, x)

    def rhs(x):
        return np.log1p(x) if upper < 0 else cf_values(upper, x)

    def label(n):
        return "ln(1+x)" if n < 0 else f"R_{n}(x)"

    return BoundFamily(
        key=FamilyKey(tag=tag, variant=f"{label(lower)}<{label(upper)}"),
        statement=f"{label(lower)} < {label(upper)}",
        lhs=lhs,
        rhs=rhs,
        domain=ENCLOSURE_DOMAIN,
        strict=True,
    )


def check_cf_enclosure(k: int, samples: int = 10**4, seed: int = 0) -> Certificate:
    """R_2k < ln(1 + x) < R_2k+1 on (0, 100]."""
    if k < 0:
        raise ParameterError(f"Enclosure index must be nonnegative, got {k}")
    families = [
        _convergent_family("cf-enclosure", 2 * k, -1),
        _convergent_family("cf-enclosure", -1, 2 * k + 1),
    ]
    certs = [certify(f, samples=samples, seed=seed) for f in families]
    cert = merge_certificates(f"cf-enclosure:{k}", certs)
    _LOGGER.info(f"cf enclosure k={k} holds={cert.holds}")
    return cert


def check_cf_refinement(k: int, samples: int = 10**4, seed: int = 0) -> Certificate:
    """R_2k < R_2k+2 and R_2k+3 < R_2k+1 on (0, 100]."""
    if k < 0:
        raise ParameterError(f"Refinement index must be nonnegative, got {k}")
    families = [
        _convergent_family("cf-refinement", 2 * k, 2 * k + 2),
        _convergent_family("cf-refinement", 2 * k + 3, 2 * k + 1),
    ]
    certs = [certify(f, samples=samples, seed=seed) for f in families]
    return merge_certificates(f"cf-refinement:{k}", certs)
