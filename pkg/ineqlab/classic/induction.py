"""Finite-n sweeps of inequalities usually proved by induction.

Each fixture maps an array of n to (lhs, rhs); products and factorials
are compared through their logarithms.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.special import gammaln

from ..dataclass import InductionCheck
from ..exceptions import ParameterError
from ..helper import compensated_cumsum

_LOGGER = logging.getLogger(__name__)

MARGIN_TOLERANCE = 1e-12

Sides = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class InductionFixture:
    id: str
    statement: str
    n_min: int
    n_max: int
    strict: bool
    sides: Sides


_FIXTURES: dict[str, InductionFixture] = {}


def register_induction(
    fixture_id: str, statement: str, n_min: int, n_max: int, strict: bool = True
):
    def decorator(sides: Sides) -> Sides:
        if fixture_id in _FIXTURES:
            raise ValueError(f"Induction fixture {fixture_id} registered twice")
        _FIXTURES[fixture_id] = InductionFixture(
            fixture_id, statement, n_min, n_max, strict, sides
        )
        return sides

    return decorator


def induction_fixtures() -> list[InductionFixture]:
    return [_FIXTURES[fixture_id] for fixture_id in sorted(_FIXTURES)]


def get_induction_fixture(fixture_id: str) -> InductionFixture:
    if fixture_id not in _FIXTURES:
        raise ParameterError(f"Induction fixture {fixture_id} not found")
    return _FIXTURES[fixture_id]


def _prefix(n: np.ndarray, term: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """sum_{k=1}^{n} term(k) for each entry of the increasing array n."""
    k = np.arange(1, int(n[-1]) + 1, dtype=np.float64)
    return compensated_cumsum(term(k))[n.astype(np.int64) - 1]


@register_induction("factorial-lt-half-power", "n! < (n/2)^n", 6, 30)
def _factorial_half_power(n):
    return gammaln(n + 1), n * np.log(n / 2)


@register_induction("factorial-gt-third-power", "(n/3)^n < n!", 1, 100)
def _factorial_third_power(n):
    return n * np.log(n / 3), gammaln(n + 1)


@register_induction("central-binomial", "4^n/(n+1) < (2n)!/(n!)^2", 2, 500)
def _central_binomial(n):
    return n * math.log(4) - np.log(n + 1), gammaln(2 * n + 1) - 2 * gammaln(n + 1)


@register_induction(
    "inverse-squares", "sum 1/k^2 <= 2 - 1/n", 1, 10**4, strict=False
)
def _inverse_squares(n):
    return _prefix(n, lambda k: 1.0 / k**2), 2.0 - 1.0 / n


@register_induction("root-sum-lower", "sqrt(n) < sum 1/sqrt(k)", 2, 10**4)
def _root_sum_lower(n):
    return np.sqrt(n), _prefix(n, lambda k: 1.0 / np.sqrt(k))


@register_induction("root-sum-upper", "sum 1/sqrt(k) < 2 sqrt(n)", 1, 10**4)
def _root_sum_upper(n):
    return _prefix(n, lambda k: 1.0 / np.sqrt(k)), 2.0 * np.sqrt(n)


@register_induction("cube-product", "prod (1 + 1/k^3) < 3 - 1/n", 2, 10**3)
def _cube_product(n):
    return _prefix(n, lambda k: np.log1p(1.0 / k**3)), np.log(3.0 - 1.0 / n)


@register_induction(
    "half-odd-product",
    "1/2 * 3/4 * ... * (2n-1)/(2n) <= 1/sqrt(3n+1)",
    1,
    10**3,
    strict=False,
)
def _half_odd_product(n):
    return _prefix(n, lambda k: np.log1p(-0.5 / k)), -0.5 * np.log(3.0 * n + 1.0)


@register_induction(
    "binomial-power-mean", "(a+b)^n < 2^(n-1) (a^n + b^n) at a=1, b=2", 2, 200
)
def _binomial_power_mean(n):
    rhs = (n - 1) * math.log(2) + np.logaddexp(0.0, n * math.log(2))
    return n * math.log(3), rhs


def check_induction(
    fixture: InductionFixture | str, n_max: Optional[int] = None
) -> InductionCheck:
    """Evaluates a fixture on every n in [n_min, n_max]."""
    if isinstance(fixture, str):
        fixture = get_induction_fixture(fixture)
    n_max = fixture.n_max if n_max is None else n_max
    if n_max < fixture.n_min:
        raise ParameterError(f"Fixture {fixture.id} needs n_max >= {fixture.n_min}")
    n = np.arange(fixture.n_min, n_max + 1, dtype=np.float64)
    lhs, rhs = fixture.sides(n)
    margin = rhs - lhs
    tol = MARGIN_TOLERANCE * (np.abs(lhs) + np.abs(rhs) + 1.0)
    holds = margin > tol if fixture.strict else margin >= -tol
    worst = int(np.argmin(margin))
    check = InductionCheck(
        id=fixture.id,
        statement=fixture.statement,
        n_min=fixture.n_min,
        n_max=n_max,
        holds=bool(np.all(holds)),
        failures=[int(k) for k in n[~holds]],
        worst_n=int(n[worst]),
        worst_margin=float(margin[worst]),
    )
    _LOGGER.info(
        f"induction {fixture.id} n=[{fixture.n_min}, {n_max}] holds={check.holds} "
        f"worst_n={check.worst_n}"
    )
    return check
