"""eps(z) = 1 / ln(1 + 1/z) - z off the cut [-1, 0]."""

import logging

import numpy as np

from ..dataclass import ComplexPoint, ScanGrid
from ..exceptions import DomainError
from ..helper import complex_log1p
from ..logbounds.eps import GREGORY_COEFFICIENTS, SERIES_CUTOFF
from .amgm import PointLike, as_complex

_LOGGER = logging.getLogger(__name__)

CUT_PUNCTURE = 1e-12


def _on_cut(z: np.ndarray) -> np.ndarray:
    near_ends = (np.abs(z) < CUT_PUNCTURE) | (np.abs(z + 1.0) < CUT_PUNCTURE)
    segment = (z.imag == 0) & (z.real >= -1.0) & (z.real <= 0.0)
    return near_ends | segment


def eps_complex_values(z) -> np.ndarray:
    """Vectorized eps(z); NaN on the cut.

    For |z| >= 1000 the Gregory series of 1/ln(1 + w) - 1/w at w = 1/z
    replaces the cancelling difference. Positive reals use the real
    logarithm.
    """
    z = np.asarray(z, dtype=np.complex128)
    cut = _on_cut(z)
    safe = np.where(cut, 1.0, z)
    w = 1.0 / safe
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = 1.0 / complex_log1p(w) - safe
    series = np.zeros_like(w)
    for g in reversed(GREGORY_COEFFICIENTS):
        series = series * w + g
    values = np.where(np.abs(safe) >= SERIES_CUTOFF, series, direct)
    positive = (safe.imag == 0) & (safe.real > 0) & (np.abs(safe) < SERIES_CUTOFF)
    if np.any(positive):
        x = safe.real[positive]
        values[positive] = 1.0 / np.log1p(1.0 / x) - x
    return np.where(cut, np.nan + 0j, values)


def eps_complex(z: PointLike) -> tuple[ComplexPoint, float]:
    z = as_complex(z)
    value = complex(eps_complex_values(z))
    if np.isnan(value.real):
        raise DomainError(f"eps is not defined on the cut [-1, 0], got {z}")
    return ComplexPoint.from_complex(value), abs(value)


def eps_complex_sup(grid: ScanGrid) -> tuple[float, ComplexPoint]:
    """Largest |eps| over grid points off the cut, with its location."""
    re, im = np.meshgrid(grid.re_values, grid.im_values)
    z = (re + 1j * im).ravel()
    modulus = np.abs(eps_complex_values(z))
    if np.all(np.isnan(modulus)):
        raise DomainError("Every grid point lies on the cut [-1, 0]")
    i = int(np.nanargmax(modulus))
    _LOGGER.info(f"eps sup={modulus[i]} at {z[i]} over {z.size} points")
    return float(modulus[i]), ComplexPoint.from_complex(z[i])
