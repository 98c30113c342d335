"""Bernoulli numbers, zeta at even arguments and alternating zeta sums."""

import functools
import logging
import math
from fractions import Fraction

import mpmath
import numpy as np

from .dataclass import BernoulliTable
from .exceptions import DomainError, ParameterError, RangeError
from .helper import compensated_sum

_LOGGER = logging.getLogger(__name__)

MAX_BERNOULLI_INDEX = 60
MAX_EVEN_ORDER = MAX_BERNOULLI_INDEX // 2
DEFAULT_TERMS = 10**4


@functools.lru_cache(maxsize=None)
def _bernoulli_values(upto: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{m} binom(m + 1, j) B_j = 0 for m >= 1
    values = [Fraction(1)]
    for m in range(1, upto + 1):
        total = sum(math.comb(m + 1, j) * values[j] for j in range(m))
        values.append(-total / (m + 1))
    return tuple(values)


def bernoulli(upto: int) -> BernoulliTable:
    if upto < 0:
        raise ParameterError(f"Bernoulli index must be nonnegative, got {upto}")
    if upto > MAX_BERNOULLI_INDEX:
        raise RangeError(
            f"Bernoulli numbers are tabulated up to {MAX_BERNOULLI_INDEX}, got {upto}"
        )
    return BernoulliTable(values=list(_bernoulli_values(upto)))


def _check_even_order(n: int):
    if not 1 <= n <= MAX_EVEN_ORDER:
        raise RangeError(f"Even order must lie in [1, {MAX_EVEN_ORDER}], got {n}")


def zeta_even(n: int) -> float:
    """zeta(2n) = 2^(2n-1) pi^(2n) |B_2n| / (2n)!."""
    _check_even_order(n)
    coefficient = abs(bernoulli(2 * n)[2 * n]) / math.factorial(2 * n)
    return float(coefficient) * (2.0 * math.pi) ** (2 * n) / 2.0


def eta_even(n: int) -> float:
    """(2^(2n-1) - 1) pi^(2n) |B_2n| / (2n)!."""
    _check_even_order(n)
    return -math.expm1((1 - 2 * n) * math.log(2)) * zeta_even(n)


def _eta_factor(a: float) -> float:
    """1 - 2^(1-a)."""
    return -math.expm1((1.0 - a) * math.log(2))


def eta_from_zeta(a: float) -> float:
    """(1 - 2^(1-a)) zeta(a); at a = 1 use ln 2."""
    if not a > 0:
        raise DomainError(f"Alternating zeta needs a > 0, got {a}")
    if a == 1:
        raise DomainError("zeta has a pole at 1; the alternating sum there is ln 2")
    return _eta_factor(a) * float(mpmath.zeta(a))


def eta_direct(a: float, terms: int = DEFAULT_TERMS) -> float:
    """Mean of the last two partial sums of sum (-1)^(k+1) / k^a."""
    if not a > 0:
        raise DomainError(f"Alternating zeta needs a > 0, got {a}")
    if terms < 2:
        raise ParameterError(f"Alternating sum needs at least 2 terms, got {terms}")
    k = np.arange(1, terms + 1, dtype=np.float64)
    values = np.power(k, -float(a))
    values[1::2] *= -1.0
    return compensated_sum(np.append(values[:-1], 0.5 * values[-1]))


def zeta_via_eta(a: float, terms: int = DEFAULT_TERMS) -> float:
    """eta_direct(a) / (1 - 2^(1-a)), valid for 0 < a, a != 1."""
    if a == 1:
        raise DomainError("zeta has a pole at 1")
    return eta_direct(a, terms) / _eta_factor(a)


def zeta_direct(s: float, terms: int = DEFAULT_TERMS) -> float:
    """sum_{k<=n} k^-s + n^(1-s)/(s-1) - n^-s/2."""
    if not s > 1:
        raise DomainError(f"Direct zeta sum needs s > 1, got {s}")
    if terms < 1:
        raise ParameterError(f"Direct zeta sum needs terms >= 1, got {terms}")
    k = np.arange(1, terms + 1, dtype=np.float64)
    n = float(terms)
    tail = n ** (1.0 - s) / (s - 1.0) - 0.5 * n ** (-s)
    return compensated_sum(np.append(np.power(k, -float(s)), tail))


def zeta_direct_error_bound(s: float, terms: int = DEFAULT_TERMS) -> float:
    """Magnitude s n^(-s-1) / 12 of the first neglected correction."""
    return s * float(terms) ** (-s - 1.0) / 12.0


def odd_zeta(s: float, terms: int = DEFAULT_TERMS) -> float:
    """sum 1/(2k-1)^s = (1 - 2^-s) zeta(s)."""
    return -math.expm1(-s * math.log(2)) * zeta_direct(s, terms)
