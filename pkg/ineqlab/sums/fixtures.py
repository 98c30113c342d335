import logging
from typing import Optional

import numpy as np

from ..dataclass import BoundSide, SeriesModel, SLBound, SLFixture, SLSweep, SLVerdict
from ..exceptions import ParameterError
from ..registry import get_fixture_registry
from .models import (
    envelope_form,
    extrapolated_constant,
    partial_sums,
    resolve_model,
)

_LOGGER = logging.getLogger(__name__)

EQUALITY_TOLERANCE = 1e-12
EULER_REFERENCE_N = 10**6


def fixture_registry() -> list[SLFixture]:
    registry = get_fixture_registry()
    return [registry[fixture_id] for fixture_id in sorted(registry)]


def get_fixture(fixture_id: str) -> SLFixture:
    registry = get_fixture_registry()
    if fixture_id not in registry:
        raise ParameterError(f"Fixture {fixture_id} not found")
    return registry[fixture_id]


def fixture_constant(fixture: SLFixture, bound: SLBound) -> float:
    if not bound.symbolic:
        return bound.constant
    return extrapolated_constant(
        fixture.model_id, EULER_REFERENCE_N, envelope=fixture.envelope
    )


def _bound_values(
    model: SeriesModel,
    envelope: Optional[str],
    bound: SLBound,
    constant: float,
    n: np.ndarray,
) -> np.ndarray:
    g = envelope_form(model, envelope)
    m = n if bound.side == BoundSide.AT_N else n + 1
    values = g(m) + constant
    if bound.term_coefficient != 0:
        values = values + bound.term_coefficient * model.term(n + 1)
    return values


def _counts(n: np.ndarray, mask: np.ndarray) -> list[int]:
    return [int(k) for k in n[mask]]


def _margins(
    lower: np.ndarray, value: np.ndarray, upper: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    tol = EQUALITY_TOLERANCE * (np.abs(value) + 1.0)
    return value - lower, upper - value, tol


def _verdicts(
    lower_bound: SLBound,
    upper_bound: SLBound,
    lower: np.ndarray,
    value: np.ndarray,
    upper: np.ndarray,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(holds, lower equality, upper equality) per n."""
    lower_margin, upper_margin, tol = _margins(lower, value, upper)
    lower_equal = np.abs(lower_margin) <= tol
    upper_equal = np.abs(upper_margin) <= tol
    lower_ok = lower_margin > tol if lower_bound.strict else lower_margin >= -tol
    upper_ok = upper_margin > tol if upper_bound.strict else upper_margin >= -tol
    return lower_ok & upper_ok, lower_equal, upper_equal


def sl_bounds(
    model: SeriesModel | str,
    n: int,
    constants: tuple[float, float],
    sides: tuple[BoundSide, BoundSide] = (BoundSide.AT_N, BoundSide.AT_N),
    strict: tuple[bool, bool] = (True, True),
    envelope: Optional[str] = None,
) -> SLVerdict:
    """Checks G(m) + C_lo < S_n < G(m) + C_hi with m = n or n + 1 per side."""
    model = resolve_model(model)
    if n < model.start:
        raise ParameterError(f"Series {model.id} needs n >= {model.start}, got {n}")
    lower_bound = SLBound(side=sides[0], constant=constants[0], strict=strict[0])
    upper_bound = SLBound(side=sides[1], constant=constants[1], strict=strict[1])
    points = np.array([float(n)])
    value = partial_sums(model, n)[-1:]
    lower = _bound_values(model, envelope, lower_bound, lower_bound.constant, points)
    upper = _bound_values(model, envelope, upper_bound, upper_bound.constant, points)
    holds, lower_equal, upper_equal = _verdicts(
        lower_bound, upper_bound, lower, value, upper
    )
    return SLVerdict(
        n=n,
        lower=float(lower[0]),
        value=float(value[0]),
        upper=float(upper[0]),
        holds=bool(holds[0]),
        lower_equality=bool(lower_equal[0]),
        upper_equality=bool(upper_equal[0]),
    )


def check_fixture(fixture: SLFixture | str, n_max: Optional[int] = None) -> SLSweep:
    """Sweeps a two-sided fixture over n_min..n_max."""
    if isinstance(fixture, str):
        fixture = get_fixture(fixture)
    model = resolve_model(fixture.model_id)
    n_max = fixture.n_max if n_max is None else n_max
    n_min = max(fixture.n_min, model.start)
    if n_max < n_min:
        raise ParameterError(f"Fixture {fixture.id} needs n_max >= {n_min}")
    n = np.arange(n_min, n_max + 1, dtype=np.float64)
    value = partial_sums(model, n_max)[n_min - model.start :]
    lower_c = fixture_constant(fixture, fixture.lower)
    upper_c = fixture_constant(fixture, fixture.upper)
    lower = _bound_values(model, fixture.envelope, fixture.lower, lower_c, n)
    upper = _bound_values(model, fixture.envelope, fixture.upper, upper_c, n)
    holds, lower_equal, upper_equal = _verdicts(
        fixture.lower, fixture.upper, lower, value, upper
    )
    lower_margin, upper_margin, _ = _margins(lower, value, upper)
    sweep = SLSweep(
        fixture_id=fixture.id,
        n_min=n_min,
        n_max=n_max,
        holds=bool(np.all(holds)),
        failures=_counts(n, ~holds),
        lower_equalities=_counts(n, lower_equal),
        upper_equalities=_counts(n, upper_equal),
        worst_lower_margin=float(lower_margin.min()),
        worst_upper_margin=float(upper_margin.min()),
    )
    _LOGGER.info(
        f"fixture {fixture.id} n=[{n_min}, {n_max}] holds={sweep.holds} "
        f"failures={len(sweep.failures)}"
    )
    return sweep
