"""Scalar maps the solve commands run on, looked up by name."""

import math
from dataclasses import dataclass
from typing import Callable, Optional

from ..exceptions import ParameterError
from ..solve import ScalarMap

DEFAULT_LEVEL = 0.4


@dataclass(frozen=True)
class Problem:
    f: ScalarMap
    df: Optional[ScalarMap] = None


_PROBLEMS: dict[str, Callable[[float], Problem]] = {}


def register_problem(name: str):
    def decorator(factory: Callable[[float], Problem]) -> Callable[[float], Problem]:
        if name in _PROBLEMS:
            raise ValueError(f"Problem {name} registered twice")
        _PROBLEMS[name] = factory
        return factory

    return decorator


def problem_names() -> list[str]:
    return sorted(_PROBLEMS)


def get_problem(name: str, level: float = DEFAULT_LEVEL) -> Problem:
    if name not in _PROBLEMS:
        raise ParameterError(
            f"Unknown problem {name}, expected one of {problem_names()}"
        )
    return _PROBLEMS[name](level)


@register_problem("sqrt2")
def _sqrt2(level: float) -> Problem:
    return Problem(f=lambda x: x * x - 2.0, df=lambda x: 2.0 * x)


@register_problem("cube")
def _cube(level: float) -> Problem:
    # triple root at 0
    return Problem(f=lambda x: x**3, df=lambda x: 3.0 * x * x)


@register_problem("half")
def _half(level: float) -> Problem:
    return Problem(f=lambda x: 0.5 * x, df=lambda x: 0.5)


@register_problem("eps-level")
def _eps_level(level: float) -> Problem:
    """1/ln(1 + 1/x) - x - level; its root is where eps reaches level."""

    def f(x):
        return 1.0 / math.log1p(1.0 / x) - x - level

    def df(x):
        log = math.log1p(1.0 / x)
        return 1.0 / (x * (x + 1.0) * log * log) - 1.0

    return Problem(f=f, df=df)


@register_problem("lambda-map")
def _lambda_map(level: float) -> Problem:
    return Problem(f=lambda x: 1.0 / math.log1p(1.0 / x) - level)


@register_problem("inverse-map")
def _inverse_map(level: float) -> Problem:
    return Problem(f=lambda x: 1.0 / math.expm1(1.0 / (x + level)))
