import logging
import math

import mpmath
import numpy as np
from scipy.special import gammaln

from ..exceptions import NoConvergence, ParameterError
from ..helper import compensated_sum

_LOGGER = logging.getLogger(__name__)

GUARD_DIGITS = 30
MAX_TERMS = 10**6


def _peak_log10(x: float) -> float:
    """log10 of the largest |x|^k / sqrt(k!) over k."""
    if abs(x) <= 1:
        return 0.0
    k = np.arange(0, int(x * x) + 2)
    logs = k * math.log(abs(x)) - 0.5 * gammaln(k + 1)
    return float(logs.max()) / math.log(10)


def sqrt_factorial_series(x: float, tol: float = 1e-16) -> float:
    """sum_k x^k / sqrt(k!), stopped once a term falls below tol * |partial|.

    Terms grow until k ~ x^2, so the loop never stops before that. Negative
    x cancels heavily and is summed in extended precision sized to the
    largest term.
    """
    if not tol > 0:
        raise ParameterError(f"Tolerance must be positive, got {tol}")
    if not math.isfinite(x):
        raise ParameterError(f"Series needs a finite argument, got {x}")
    if x == 0:
        return 1.0
    min_terms = int(x * x) + 1
    if x > 0:
        terms = [1.0]
        term = total = 1.0
        for k in range(1, MAX_TERMS):
            term *= x / math.sqrt(k)
            terms.append(term)
            total += term
            if k > min_terms and term < tol * total:
                return compensated_sum(terms)
        raise NoConvergence(f"Series at {x} did not settle in {MAX_TERMS} terms")
    digits = GUARD_DIGITS + int(math.ceil(_peak_log10(x)))
    with mpmath.workdps(digits):
        total = mpmath.mpf(1)
        term = mpmath.mpf(1)
        for k in range(1, MAX_TERMS):
            term *= mpmath.mpf(x) / mpmath.sqrt(k)
            total += term
            if k > min_terms and abs(term) < tol * abs(total):
                _LOGGER.debug(f"series at {x} used {k + 1} terms at {digits} digits")
                return float(total)
    raise NoConvergence(f"Series at {x} did not settle in {MAX_TERMS} terms")
