import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

import numpy as np

from .env import THREADS

T = TypeVar("T")
R = TypeVar("R")

BLOCK_SIZE = 10**6
_MAX_ORDERED_SUM = 10**7


def compensated_sum(values: Iterable[float] | np.ndarray) -> float:
    """Correctly rounded sum of values, accumulated smallest magnitude first.

    Above ten million terms the values are reduced block by block and the
    block totals are combined in block order.
    """
    values = np.asarray(values, dtype=np.float64).ravel()
    if values.size <= _MAX_ORDERED_SUM:
        return math.fsum(values[np.argsort(np.abs(values), kind="stable")])
    partials = [
        compensated_sum(values[i : i + BLOCK_SIZE])
        for i in range(0, values.size, BLOCK_SIZE)
    ]
    return math.fsum(partials)


def compensated_cumsum(values: Iterable[float] | np.ndarray) -> np.ndarray:
    """Running sums of values with Kahan-Babuska error compensation."""
    values = np.asarray(values, dtype=np.float64).ravel()
    result = np.empty_like(values)
    total = 0.0
    carry = 0.0
    for i, value in enumerate(values.tolist()):
        t = total + value
        if abs(total) >= abs(value):
            carry += (total - t) + value
        else:
            carry += (value - t) + total
        total = t
        result[i] = total + carry
    return result


def ordered_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Maps fn over items on a thread pool; results keep the input order."""
    items = list(items)
    if THREADS <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(THREADS, len(items))) as executor:
        return list(executor.map(fn, items))


def log_abs_expm1(z: np.ndarray) -> np.ndarray:
    """log|e^z - 1| without overflow for large |z|."""
    z = np.asarray(z, dtype=np.float64)
    with np.errstate(divide="ignore"):
        return np.maximum(z, 0.0) + np.log(-np.expm1(-np.abs(z)))


def principal_log(u: np.ndarray) -> np.ndarray:
    """Principal complex logarithm with arguments in (-pi, pi]."""
    u = np.asarray(u, dtype=np.complex128)
    # Signed zeros in the imaginary part would select -pi on the negative axis.
    u = u.real + 1j * (u.imag + 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.log(u)


def complex_log1p(w: np.ndarray) -> np.ndarray:
    """Principal log(1 + w) accurate for small |w|."""
    w = np.asarray(w, dtype=np.complex128)
    u = 1.0 + w
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = principal_log(u) * (w / (u - 1.0))
    result = np.where(u == 1.0, w, scaled)
    return complex(result) if result.ndim == 0 else result


def format_number(value: float) -> str:
    """Shortest text for value using at most 17 significant digits."""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")
