"""Named generators f of quasi-arithmetic means f^{-1}(sum p_k f(x_k))."""

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..exceptions import GeneratorError

ScalarMap = Callable[[np.ndarray], np.ndarray]

MONOTONICITY_SAMPLES = 64


@dataclass(frozen=True)
class Generator:
    name: str
    forward: ScalarMap
    inverse: Optional[ScalarMap] = None
    positive: bool = False

    def __call__(self, x):
        with np.errstate(all="ignore"):
            return self.forward(np.asarray(x, dtype=np.float64))

    def invert(self, value):
        if self.inverse is None:
            raise GeneratorError(f"Generator {self.name} has no closed inverse")
        with np.errstate(all="ignore"):
            return self.inverse(np.asarray(value, dtype=np.float64))


_GENERATORS: dict[str, Generator] = {}


def _register(generator: Generator):
    if generator.name in _GENERATORS:
        raise ValueError(f"Generator {generator.name} registered twice")
    _GENERATORS[generator.name] = generator


_register(Generator("identity", lambda x: x, lambda v: v))
_register(Generator("log", np.log, np.exp, positive=True))
_register(Generator("exp", np.exp, np.log))
_register(Generator("reciprocal", lambda x: 1.0 / x, lambda v: 1.0 / v, True))
_register(Generator("square", np.square, np.sqrt, positive=True))
_register(Generator("sqrt", np.sqrt, np.square, positive=True))
_register(Generator("xlogx", lambda x: x * np.log(x), positive=True))
_register(Generator("sin", np.sin))
_register(Generator("arctan", np.arctan, np.tan))


def _power_generator(p: float) -> Generator:
    if p == 0:
        return Generator("power:0", np.log, np.exp, positive=True)
    return Generator(
        f"power:{p:g}",
        lambda x: np.power(x, p),
        lambda v: np.power(v, 1.0 / p),
        positive=True,
    )


def generator_names() -> list[str]:
    return sorted(_GENERATORS) + ["power:<p>"]


def get_generator(name: str) -> Generator:
    if name.startswith("power:"):
        try:
            p = float(name.split(":", 1)[1])
        except ValueError as e:
            raise GeneratorError(f"Invalid power generator: {name}") from e
        if not math.isfinite(p):
            raise GeneratorError(f"Power generator needs a finite exponent: {name}")
        return _power_generator(p)
    if name not in _GENERATORS:
        raise GeneratorError(f"Unknown generator {name}")
    return _GENERATORS[name]


def check_monotone(generator: Generator, lo: float, hi: float) -> int:
    """Samples the generator on [lo, hi]; returns +1 or -1 for its direction.

    Raises GeneratorError unless the samples are strictly monotone.
    """
    if generator.positive and lo <= 0:
        raise GeneratorError(f"Generator {generator.name} needs positive arguments")
    if lo == hi:
        return 1
    values = generator(np.linspace(lo, hi, MONOTONICITY_SAMPLES))
    if not np.all(np.isfinite(values)):
        raise GeneratorError(
            f"Generator {generator.name} is not finite on [{lo}, {hi}]"
        )
    steps = np.diff(values)
    if np.all(steps > 0):
        return 1
    if np.all(steps < 0):
        return -1
    raise GeneratorError(f"Generator {generator.name} is not monotone on [{lo}, {hi}]")


def check_monotone_pairs(generator: Generator, x: np.ndarray, y: np.ndarray):
    """Samples the generator on the hull of every pair (x_i, y_i) at once.

    Steps may not change sign along a pair. Zero steps are allowed since
    hulls a few ulps wide sample to repeated values.
    """
    lo, hi = np.minimum(x, y).ravel(), np.maximum(x, y).ravel()
    spread = lo < hi
    lo, hi = lo[spread], hi[spread]
    if lo.size == 0:
        return
    if generator.positive and np.any(lo <= 0):
        raise GeneratorError(f"Generator {generator.name} needs positive arguments")
    t = np.linspace(0.0, 1.0, MONOTONICITY_SAMPLES)
    values = generator(lo[:, None] + (hi - lo)[:, None] * t)
    steps = np.diff(values, axis=1)
    finite = np.all(np.isfinite(values), axis=1)
    monotone = np.all(steps >= 0, axis=1) | np.all(steps <= 0, axis=1)
    bad = np.flatnonzero(~(finite & monotone))
    if bad.size > 0:
        i = bad[0]
        raise GeneratorError(
            f"Generator {generator.name} is not monotone on [{lo[i]}, {hi[i]}]"
        )
