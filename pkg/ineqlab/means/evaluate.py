import logging
import math

import numpy as np

from ..dataclass import MeanBranch, MeanKind, MeanSpec, MeanValueReport
from ..exceptions import DomainError, LengthMismatch, NoConvergence, ParameterError
from ..solve import refine_root
from .generators import (
    Generator,
    check_monotone,
    check_monotone_pairs,
    get_generator,
)
from .kernels import (
    gini_mean,
    heron_mean,
    lehmer_mean,
    power_mean,
    rado_mean,
    weighted_arith,
    weighted_geom,
)

_LOGGER = logging.getLogger(__name__)

ITERATE_TOLERANCE = 1e-14
ITERATE_MAX_ITERATIONS = 200
WEIGHT_TOLERANCE = 1e-12


def _as_generator(generator: str | Generator) -> Generator:
    return get_generator(generator) if isinstance(generator, str) else generator


def quasi_arithmetic_eval(
    generator: str | Generator, weights: list[float], xs: list[float]
) -> float:
    """f^{-1}(sum_k p_k f(x_k)) for a generator f monotone on the hull of xs.

    Generators without a closed inverse are inverted by a bracketed root
    search on [min(xs), max(xs)].
    """
    generator = _as_generator(generator)
    xs = [float(x) for x in xs]
    weights = [float(w) for w in weights]
    if len(xs) == 0:
        raise LengthMismatch("Quasi-arithmetic mean needs at least one argument")
    if len(weights) != len(xs):
        raise LengthMismatch(f"{len(weights)} weights for {len(xs)} arguments")
    if any(w < 0 for w in weights) or abs(math.fsum(weights) - 1) > WEIGHT_TOLERANCE:
        raise ParameterError(f"Weights must be nonnegative and sum to 1: {weights}")
    lo, hi = min(xs), max(xs)
    if lo == hi:
        return lo
    direction = check_monotone(generator, lo, hi)
    target = math.fsum(w * float(generator(x)) for w, x in zip(weights, xs))
    if generator.inverse is not None:
        value = float(generator.invert(target))
    else:
        trace = refine_root(
            lambda t: direction * (float(generator(t)) - target), lo, hi
        )
        value = trace.root
    return min(max(value, lo), hi)


def _quasi_arith_values(spec: MeanSpec, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    generator = get_generator(spec.generator)
    if x.size == 0:
        return np.empty(x.shape)
    a, b = spec.weights
    if generator.inverse is None:
        flat = [
            quasi_arithmetic_eval(generator, [a, b], [xi, yi])
            for xi, yi in zip(x.ravel().tolist(), y.ravel().tolist())
        ]
        return np.asarray(flat, dtype=np.float64).reshape(x.shape)
    check_monotone_pairs(generator, x, y)
    value = generator.invert(a * generator(x) + b * generator(y))
    return np.clip(value, np.minimum(x, y), np.maximum(x, y))


def iterate_values(
    m: MeanSpec,
    n: MeanSpec,
    x0,
    y0,
    tol: float = ITERATE_TOLERANCE,
    maxit: int = ITERATE_MAX_ITERATIONS,
) -> tuple[np.ndarray, int]:
    """Runs x <- M(x, y), y <- N(x, y) on whole arrays until every pair
    agrees to tol relative; returns the midpoints and the iteration count."""
    x, y = np.broadcast_arrays(
        np.asarray(x0, dtype=np.float64), np.asarray(y0, dtype=np.float64)
    )
    if np.any(~(x > 0)) or np.any(~(y > 0)):
        raise DomainError("Iterated means need positive starting values")
    iterations = 0
    while True:
        gap = np.abs(x - y) <= tol * np.maximum(x, y)
        if np.all(gap):
            break
        if iterations >= maxit:
            raise NoConvergence(
                f"Iteration of {m.as_string()} and {n.as_string()} "
                f"did not converge in {maxit} steps"
            )
        x, y = mean_values(m, x, y), mean_values(n, x, y)
        iterations += 1
    return 0.5 * (x + y), iterations


def _kernel(spec: MeanSpec, x, y) -> tuple[np.ndarray, np.ndarray]:
    p = spec.params
    if spec.kind == MeanKind.POWER:
        return power_mean(p[0], x, y)
    if spec.kind == MeanKind.RADO:
        return rado_mean(p[0], x, y)
    if spec.kind == MeanKind.GINI:
        return gini_mean(p[0], p[1], x, y)
    if spec.kind == MeanKind.LEHMER:
        return lehmer_mean(p[0], x, y)
    if spec.kind == MeanKind.HERON:
        return heron_mean(x, y)
    if spec.kind == MeanKind.WEIGHTED_ARITH:
        return weighted_arith(p[0], p[1], x, y)
    if spec.kind == MeanKind.WEIGHTED_GEOM:
        return weighted_geom(p[0], p[1], x, y)
    x, y = np.broadcast_arrays(
        np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64)
    )
    none = np.zeros(x.shape, dtype=bool)
    if spec.kind == MeanKind.QUASI_ARITH:
        return _quasi_arith_values(spec, x, y), none
    if spec.kind == MeanKind.ITERATED:
        return iterate_values(spec.components[0], spec.components[1], x, y)[0], none
    raise ParameterError(f"Unknown mean kind {spec.kind}")


def mean_values(spec: MeanSpec, x, y) -> np.ndarray:
    """Vectorized evaluation of spec over broadcastable arrays."""
    return _kernel(spec, x, y)[0]


def mean_eval(spec: MeanSpec, x: float, y: float) -> MeanValueReport:
    if spec.kind == MeanKind.ITERATED:
        mu, iterations = iterate_values(spec.components[0], spec.components[1], x, y)
        return MeanValueReport(value=float(mu), iterations=iterations)
    value, limit = _kernel(spec, x, y)
    report = MeanValueReport(
        value=float(value),
        branch=MeanBranch.LIMIT_CASE if bool(limit) else MeanBranch.GENERIC,
    )
    _LOGGER.debug(f"{spec.as_string()}({x}, {y}) = {report.value} {report.branch}")
    return report


def mean_conjugate(spec: MeanSpec, x: float, y: float) -> float:
    """M*(x, y) = xy / M(x, y)."""
    if not (x > 0 and y > 0):
        raise DomainError(f"Conjugate means need positive arguments, got {x}, {y}")
    value = mean_eval(spec, x, y).value
    if value == 0:
        raise DomainError(f"{spec.as_string()}({x}, {y}) is zero")
    return x * y / value


def conjugate_values(spec: MeanSpec, x, y) -> np.ndarray:
    x, y = np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64)
    return x * y / mean_values(spec, x, y)


def mean_profile_h(spec: MeanSpec, t: float) -> float:
    """h(t) = M(1, e^t) / (1 + e^t), so that M(x, y) = (x + y) h(ln(y / x))."""
    return float(profile_values(spec, t))


def profile_values(spec: MeanSpec, t) -> np.ndarray:
    t = np.asarray(t, dtype=np.float64)
    with np.errstate(over="ignore"):
        e = np.exp(t)
    return mean_values(spec, np.ones_like(t), e) / (1.0 + e)
