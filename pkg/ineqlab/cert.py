"""Sampling certifier for inequalities lhs <= rhs.

Points are drawn from a Philox generator keyed by the seed, so a given
(family, samples, seed, strategy) always yields the same certificate.
Blocks of points are evaluated on a thread pool and reduced in order.
"""

import math
from typing import Callable, Optional

import numpy as np

from .dataclass import (
    BoundFamily,
    Certificate,
    Interval,
    SamplingStrategy,
    SharpnessRow,
)
from .exceptions import DomainError
from .helper import ordered_map
from .logging import get_run_logger

MAX_COUNTEREXAMPLES = 32
RELATIVE_TOLERANCE = 1e-12
CERTIFY_BLOCK_SIZE = 1 << 15

_LOG_MIN_DISTANCE = 1e-8
_LOG_MAX_DISTANCE = 1e6
_INFINITE_REACH = 1e6


def _log_uniform(interval: Interval, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    lo, hi = interval.lo, interval.hi
    if 0 < lo and math.isfinite(hi):
        return np.exp(np.log(lo) + u * (np.log(hi) - np.log(lo)))
    if hi < 0 and math.isfinite(lo):
        return -np.exp(np.log(-hi) + u * (np.log(-lo) - np.log(-hi)))
    width = hi - lo
    reach = min(_LOG_MAX_DISTANCE, width)
    if reach <= _LOG_MIN_DISTANCE:
        return lo + u * width
    d = np.exp(np.log(_LOG_MIN_DISTANCE) + u * np.log(reach / _LOG_MIN_DISTANCE))
    if math.isfinite(lo):
        return lo + d
    if math.isfinite(hi):
        return hi - d
    return np.where(v < 0.5, -d, d)


def _finite_ends(interval: Interval) -> tuple[float, float]:
    lo, hi = interval.lo, interval.hi
    if math.isinf(lo) and math.isinf(hi):
        return -_INFINITE_REACH, _INFINITE_REACH
    if math.isinf(lo):
        return hi - _INFINITE_REACH, hi
    if math.isinf(hi):
        return lo, lo + _INFINITE_REACH
    return lo, hi


def default_strategy(domain: list[Interval]) -> SamplingStrategy:
    if any(math.isinf(i.lo) or math.isinf(i.hi) for i in domain):
        return SamplingStrategy.LOG_UNIFORM
    return SamplingStrategy.UNIFORM


def sample_points(
    domain: list[Interval],
    samples: int,
    seed: int,
    strategy: SamplingStrategy,
) -> np.ndarray:
    """Returns a (samples, dimension) array; grids may return more rows."""
    d = len(domain)
    if strategy == SamplingStrategy.GRID:
        m = int(math.ceil(samples ** (1.0 / d) - 1e-9))
        axes = []
        for interval in domain:
            lo, hi = _finite_ends(interval)
            axes.append(lo + (np.arange(m) + 0.5) * (hi - lo) / m)
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([c.ravel() for c in mesh], axis=-1)
    rng = np.random.Generator(np.random.Philox(seed))
    uniforms = rng.random((samples, d, 2))
    columns = []
    for i, interval in enumerate(domain):
        u, v = uniforms[:, i, 0], uniforms[:, i, 1]
        if strategy == SamplingStrategy.LOG_UNIFORM:
            columns.append(_log_uniform(interval, u, v))
        else:
            lo, hi = _finite_ends(interval)
            columns.append(lo + u * (hi - lo))
    return np.stack(columns, axis=-1)


def _domain_mask(family: BoundFamily, domain: list[Interval], points: np.ndarray):
    mask = np.ones(points.shape[0], dtype=bool)
    for i, interval in enumerate(domain):
        mask &= np.asarray(interval.contains(points[:, i]), dtype=bool)
    if family.ordered:
        mask &= points[:, 0] > points[:, 1]
    return mask


def _evaluate_block(family: BoundFamily, points: np.ndarray) -> dict:
    lhs, rhs = family.evaluate(points)
    finite = np.isfinite(lhs) & np.isfinite(rhs)
    # non-finite sides are skipped before any arithmetic
    lhs, rhs = np.where(finite, lhs, 0.0), np.where(finite, rhs, 0.0)
    with np.errstate(over="ignore"):
        gap = np.where(finite, rhs - lhs, np.inf)
        scale = np.abs(lhs) + np.abs(rhs) + 1.0
    tol = RELATIVE_TOLERANCE * scale
    fails = finite & (gap < -tol)
    equal = finite & (np.abs(gap) <= tol)
    return {
        "gap": gap,
        "slack": gap / scale,
        "fails": fails,
        "equal": equal,
        "finite": finite,
    }


def certify(
    family: BoundFamily,
    samples: int = 10**4,
    seed: int = 0,
    strategy: Optional[SamplingStrategy] = None,
    domain: Optional[list[Interval]] = None,
) -> Certificate:
    """Checks family on sampled points of its domain.

    Non-finite evaluations (e.g. at a branch point) are skipped. Within
    1e-12 * (|lhs| + |rhs| + 1) of equality a point is neither a failure
    nor a pass; for strict families it is counted in strict_violations.
    """
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    domain = family.domain if domain is None else domain
    if len(domain) != family.dimension:
        raise DomainError(f"Domain of {family.id} must have {family.dimension} axes")
    if any(interval.empty for interval in domain):
        raise DomainError(f"Domain of {family.id} is empty")
    strategy = default_strategy(domain) if strategy is None else strategy
    strategy = SamplingStrategy(strategy)
    logger = get_run_logger("certify", family=family, seed=seed)

    points = sample_points(domain, samples, seed, strategy)
    mask = _domain_mask(family, domain, points)
    blocks = [
        (start, min(start + CERTIFY_BLOCK_SIZE, points.shape[0]))
        for start in range(0, points.shape[0], CERTIFY_BLOCK_SIZE)
    ]

    def run(block):
        start, stop = block
        return _evaluate_block(family, points[start:stop])

    results = ordered_map(run, blocks)
    gap = np.concatenate([r["gap"] for r in results])
    slack = np.concatenate([r["slack"] for r in results])
    fails = np.concatenate([r["fails"] for r in results]) & mask
    equal = np.concatenate([r["equal"] for r in results]) & mask
    finite = np.concatenate([r["finite"] for r in results]) & mask
    gap = np.where(mask, gap, np.inf)
    slack = np.where(mask, slack, np.inf)

    failing = np.flatnonzero(fails)
    if np.any(finite):
        worst = int(np.argmin(gap))
        worst_gap = float(gap[worst])
        worst_point = [float(c) for c in points[worst]]
        worst_slack = float(np.min(slack))
    else:
        worst_gap, worst_point, worst_slack = math.inf, [], math.inf
    certificate = Certificate(
        family_id=family.id,
        samples=int(points.shape[0]),
        seed=seed,
        strategy=strategy,
        holds=len(failing) == 0,
        worst_gap=worst_gap,
        worst_point=worst_point,
        worst_slack=worst_slack,
        counterexamples=[
            [float(c) for c in points[i]] for i in failing[:MAX_COUNTEREXAMPLES]
        ],
        failures=int(len(failing)),
        strict_violations=int(np.count_nonzero(equal)) if family.strict else 0,
        skipped=int(points.shape[0] - np.count_nonzero(finite)),
    )
    logger.info(
        f"holds={certificate.holds} samples={certificate.samples} "
        f"failures={certificate.failures} worst_gap={certificate.worst_gap}"
    )
    return certificate


def merge_certificates(family_id: str, certs: list[Certificate]) -> Certificate:
    """Combines certificates of the sides of a two-sided check."""
    if len(certs) == 0:
        raise ValueError("Nothing to merge")
    worst = min(certs, key=lambda c: c.worst_gap)
    counterexamples = []
    for cert in certs:
        counterexamples.extend(cert.counterexamples)
    return Certificate(
        family_id=family_id,
        samples=sum(c.samples for c in certs),
        seed=certs[0].seed,
        strategy=certs[0].strategy,
        holds=all(c.holds for c in certs),
        worst_gap=worst.worst_gap,
        worst_point=list(worst.worst_point),
        worst_slack=min(c.worst_slack for c in certs),
        counterexamples=counterexamples[:MAX_COUNTEREXAMPLES],
        failures=sum(c.failures for c in certs),
        strict_violations=sum(c.strict_violations for c in certs),
        skipped=sum(c.skipped for c in certs),
    )


def sharpness_probe(
    family: BoundFamily,
    knob: Callable[[float], BoundFamily],
    deltas: list[float],
    samples: int = 10**4,
    seed: int = 0,
    strategy: Optional[SamplingStrategy] = None,
) -> list[SharpnessRow]:
    """Certifies knob(delta) for every delta on the domain of family."""
    if len(deltas) == 0:
        raise ValueError("Sharpness sweep needs at least one delta")
    logger = get_run_logger("sharpness", family=family, seed=seed)
    rows = []
    for delta in deltas:
        cert = certify(
            knob(delta), samples=samples, seed=seed, strategy=strategy,
            domain=family.domain,
        )
        rows.append(
            SharpnessRow(
                delta=float(delta),
                holds=cert.holds,
                worst_gap=cert.worst_gap,
                worst_point=cert.worst_point or None,
            )
        )
        logger.debug(f"delta={delta} holds={cert.holds}")
    return rows


def sharp_transition(rows: list[SharpnessRow]) -> Optional[tuple[float, float]]:
    """First adjacent (holding delta, failing delta) pair in row order."""
    for a, b in zip(rows[:-1], rows[1:]):
        if a.holds and not b.holds:
            return a.delta, b.delta
        if b.holds and not a.holds:
            return b.delta, a.delta
    return None
