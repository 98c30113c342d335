import logging

import numpy as np

from ..exceptions import ExtrapolationUnstable, LengthMismatch

_LOGGER = logging.getLogger(__name__)

STABILITY_TOLERANCE = 1e-3


def richardson_estimates(h, values) -> np.ndarray:
    """Value at h = 0 of the interpolating polynomial through the first j points.

    Entry j - 1 uses points 0..j-1 (Neville's scheme), so the last entry is
    the full extrapolation.
    """
    h = np.asarray(h, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    if h.shape != values.shape or h.ndim != 1:
        raise LengthMismatch(f"Got {h.shape} steps for {values.shape} values")
    if h.size == 0:
        raise LengthMismatch("Extrapolation needs at least one point")
    if len(np.unique(h)) != h.size:
        raise ValueError("Extrapolation steps must be distinct")
    table = values.copy()
    estimates = [table[0]]
    for j in range(1, h.size):
        # After this pass table[i] interpolates points i..j.
        for i in range(j - 1, -1, -1):
            table[i] = (h[j] * table[i] - h[i] * table[i + 1]) / (h[j] - h[i])
        estimates.append(table[0])
    return np.array(estimates)


def richardson_limit(h, values) -> float:
    return float(richardson_estimates(h, values)[-1])


def stable_limit(h, values, tolerance: float = STABILITY_TOLERANCE) -> float:
    """Richardson limit that refuses to answer when the last two estimates part."""
    estimates = richardson_estimates(h, values)
    if estimates.size < 2:
        return float(estimates[-1])
    last, previous = estimates[-1], estimates[-2]
    if not abs(last - previous) <= tolerance * max(1.0, abs(last)):
        raise ExtrapolationUnstable(
            f"Extrapolated values {previous} and {last} disagree"
        )
    _LOGGER.debug(f"extrapolated limit={last} previous={previous}")
    return float(last)
