"""Integral-test enclosures of positive decreasing series.

For f decreasing with antiderivative F, a_n = S_n - F(n) decreases and
b_n = S_n - F(n + 1) increases; both tend to the series constant.
"""

import functools
import logging
from typing import Callable, Optional

import numpy as np

from ..dataclass import ConstantEnclosure, SeriesModel
from ..exceptions import ParameterError, SeriesModelError
from ..forms import build_form
from ..helper import compensated_cumsum, compensated_sum
from ..registry import get_series_model, get_series_registry
from .extrapolate import stable_limit

_LOGGER = logging.getLogger(__name__)

MAX_TERMS = 10**9
EXTRAPOLATION_RATIOS = (100, 10, 1)

Envelope = Callable[[np.ndarray], np.ndarray]


def series_registry() -> list[SeriesModel]:
    registry = get_series_registry()
    return [registry[model_id] for model_id in sorted(registry)]


def resolve_model(model: SeriesModel | str) -> SeriesModel:
    if isinstance(model, str):
        try:
            return get_series_model(model)
        except ValueError as e:
            raise SeriesModelError(str(e)) from e
    return model


def _check_count(model: SeriesModel, n: int, minimum: Optional[int] = None):
    minimum = model.start if minimum is None else minimum
    if n < minimum:
        raise ParameterError(f"Series {model.id} needs n >= {minimum}, got {n}")
    if n > MAX_TERMS:
        raise ParameterError(f"Series {model.id} is limited to {MAX_TERMS} terms")


def envelope_form(model: SeriesModel, envelope: Optional[str]) -> Envelope:
    return model.antiderivative if envelope is None else build_form(envelope)


def _terms(model: SeriesModel, n: int) -> np.ndarray:
    k = np.arange(model.start, n + 1, dtype=np.float64)
    return np.asarray(model.term(k), dtype=np.float64)


def partial_sum(model: SeriesModel | str, n: int) -> float:
    """S_n = sum_{k=start}^n f(k), accumulated smallest terms first."""
    model = resolve_model(model)
    _check_count(model, n)
    return compensated_sum(_terms(model, n))


def partial_sums(model: SeriesModel | str, n: int) -> np.ndarray:
    """S_start, ..., S_n."""
    model = resolve_model(model)
    _check_count(model, n)
    return compensated_cumsum(_terms(model, n))


def _evaluate(fn: Envelope, x: float) -> float:
    return float(fn(np.float64(x)))


def euler_constant(
    model: SeriesModel | str, n: int, envelope: Optional[str] = None
) -> ConstantEnclosure:
    """[S_n - G(n + 1), S_n - G(n)] with G = F unless an envelope is named."""
    model = resolve_model(model)
    _check_count(model, n, model.start + 1)
    g = envelope_form(model, envelope)
    s = partial_sum(model, n)
    lower, upper = s - _evaluate(g, n + 1), s - _evaluate(g, n)
    _LOGGER.debug(f"{model.id} n={n} enclosure=[{lower}, {upper}]")
    return ConstantEnclosure(lower=lower, upper=upper, n_used=n)


@functools.lru_cache(maxsize=32)
def _extrapolated(model_id: str, n: int, envelope: Optional[str]) -> float:
    model = resolve_model(model_id)
    g = envelope_form(model, envelope)
    counts = [n // ratio for ratio in EXTRAPOLATION_RATIOS]
    if counts[0] <= model.start:
        raise ParameterError(
            f"Extrapolating {model.id} needs n >= {100 * (model.start + 1)}"
        )
    sums = partial_sums(model, n)
    values = [sums[m - model.start] - _evaluate(g, m + 1) for m in counts]
    return stable_limit([1.0 / m for m in counts], values)


def extrapolated_constant(
    model: SeriesModel | str, n: int, envelope: Optional[str] = None
) -> float:
    """Richardson limit of b_m over m in {n/100, n/10, n}.

    Meant for models whose b_m expands in integer powers of 1/m; others
    usually raise ExtrapolationUnstable. The limit is clamped into the
    enclosure at n.
    """
    model = resolve_model(model)
    _check_count(model, n)
    value = _extrapolated(model.id, n, envelope)
    enclosure = euler_constant(model, n, envelope)
    clamped = min(max(value, enclosure.lower), enclosure.upper)
    if clamped != value:
        _LOGGER.info(f"{model.id} extrapolation {value} clamped to {clamped}")
    return clamped
