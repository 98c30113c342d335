"""Finite-vector Cauchy-Bunyakovsky, Minkowski and Hoelder checks."""

import logging
import math

import numpy as np

from ..dataclass import InequalityCheck
from ..exceptions import DomainError, LengthMismatch, ParameterError
from ..helper import compensated_sum

_LOGGER = logging.getLogger(__name__)

HOLDS_SLACK = 1e-12
EQUALITY_TOLERANCE = 1e-10


def _vectors(u, v) -> tuple[np.ndarray, np.ndarray]:
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.ndim != 1 or u.shape != v.shape:
        raise LengthMismatch(f"Vectors of shapes {u.shape} and {v.shape}")
    if u.size == 0:
        raise LengthMismatch("Vectors must have at least one entry")
    if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
        raise DomainError("Vector entries must be finite")
    return u, v


def _norm(w: np.ndarray, p: float) -> float:
    if p == 2:
        return math.sqrt(compensated_sum(w * w))
    return compensated_sum(np.power(np.abs(w), p)) ** (1.0 / p)


def _check(name: str, lhs: float, rhs: float) -> InequalityCheck:
    check = InequalityCheck(
        name=name,
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs * (1.0 + HOLDS_SLACK) + HOLDS_SLACK,
        equality=abs(lhs - rhs) <= EQUALITY_TOLERANCE * rhs,
    )
    _LOGGER.debug(f"{name} lhs={lhs} rhs={rhs} holds={check.holds}")
    return check


def cauchy_bunyakovsky(u, v) -> InequalityCheck:
    """|sum u_i v_i| <= sqrt(sum u_i^2) sqrt(sum v_i^2)."""
    u, v = _vectors(u, v)
    lhs = abs(compensated_sum(u * v))
    return _check("cauchy-bunyakovsky", lhs, _norm(u, 2) * _norm(v, 2))


def minkowski(u, v) -> InequalityCheck:
    """|u + v| <= |u| + |v| in the Euclidean norm."""
    u, v = _vectors(u, v)
    return _check("minkowski", _norm(u + v, 2), _norm(u, 2) + _norm(v, 2))


def conjugate_exponent(p: float) -> float:
    """q with 1/p + 1/q = 1."""
    if not (p > 1 and math.isfinite(p)):
        raise ParameterError(f"Exponent must be finite and greater than 1, got {p}")
    return p / (p - 1.0)


def holder(u, v, p: float) -> InequalityCheck:
    """|sum u_i v_i| <= |u|_p |v|_q with absolute values inside the norms."""
    q = conjugate_exponent(p)
    u, v = _vectors(u, v)
    lhs = abs(compensated_sum(u * v))
    return _check("holder", lhs, _norm(u, p) * _norm(v, q))


def vector_sweep(
    trials: int = 10**3, dimension: int = 100, p: float = 3.0, seed: int = 0
) -> dict[str, int]:
    """Failure counts of the three checks on standard normal vector pairs."""
    if trials < 1 or dimension < 1:
        raise ParameterError("Sweep needs positive trial count and dimension")
    rng = np.random.Generator(np.random.Philox(seed))
    failures = {"cauchy-bunyakovsky": 0, "minkowski": 0, "holder": 0}
    for _ in range(trials):
        u = rng.standard_normal(dimension)
        v = rng.standard_normal(dimension)
        for check in (cauchy_bunyakovsky(u, v), minkowski(u, v), holder(u, v, p)):
            failures[check.name] += int(not check.holds)
    _LOGGER.info(f"vector sweep trials={trials} dimension={dimension} {failures}")
    return failures
