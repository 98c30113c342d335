"""Where |ln(1 + z)| <= |z| holds in the complex plane.

Principal branch with the cut (-inf, -1]. Near 0 the residual behaves
like |z|^2 Re(z) / 2, so the inequality fails on a region left of the
imaginary axis; rays from 0 report where the residual changes sign.
"""

import logging
import math
from typing import Optional

import numpy as np

from ..dataclass import (
    LogRegionScan,
    RayCrossing,
    RegionStatus,
    RegionVerdict,
    ScanGrid,
)
from ..exceptions import DomainError
from ..helper import complex_log1p, ordered_map
from ..solve import bisect
from .amgm import PointLike, as_complex

_LOGGER = logging.getLogger(__name__)

BRANCH_PUNCTURE = 1e-9
BOUNDARY_TOLERANCE = 1e-9
RAY_START = 1e-6
RAY_POINTS = 4001
CROSSING_TOLERANCE = 1e-12


def log_region_residual(z: np.ndarray) -> np.ndarray:
    """|z| - |ln(1 + z)|; NaN inside the puncture around z = -1."""
    z = np.asarray(z, dtype=np.complex128)
    residual = np.abs(z) - np.abs(complex_log1p(z))
    return np.where(np.abs(z + 1.0) < BRANCH_PUNCTURE, np.nan, residual)


def _statuses(z: np.ndarray, residual: np.ndarray) -> list[RegionStatus]:
    tol = BOUNDARY_TOLERANCE * (1.0 + np.abs(z))
    return [
        RegionStatus.BOUNDARY
        if abs(r) <= t
        else (RegionStatus.OUTSIDE if r > 0 else RegionStatus.INSIDE)
        for r, t in zip(residual.tolist(), tol.tolist())
    ]


def log_region_classify(z: PointLike) -> RegionVerdict:
    z = as_complex(z)
    residual = float(log_region_residual(z))
    if math.isnan(residual):
        raise DomainError(f"{z} is within {BRANCH_PUNCTURE} of the branch point -1")
    status = _statuses(np.array([z]), np.array([residual]))[0]
    return RegionVerdict(status=status, residual=residual)


def _ray_crossing(angle: float, reach: float) -> RayCrossing:
    direction = complex(math.cos(angle), math.sin(angle))
    radii = np.linspace(RAY_START, reach, RAY_POINTS)
    values = log_region_residual(radii * direction)
    changes = np.flatnonzero(values[:-1] * values[1:] < 0)
    if len(changes) == 0:
        return RayCrossing(angle=angle, radius=None)
    i = int(changes[0])
    trace = bisect(
        lambda r: float(log_region_residual(r * direction)),
        radii[i],
        radii[i + 1],
        tol=CROSSING_TOLERANCE,
    )
    return RayCrossing(angle=angle, radius=trace.root)


def log_region_scan(grid: ScanGrid, rays: int = 0) -> LogRegionScan:
    """Verdicts on grid points (rows in order) plus first sign changes per ray.

    Points within the puncture around -1 are left out. Rays start at angle
    0 and are spaced 2 pi / rays apart, reaching the farthest grid corner.
    """
    re_values = np.array(grid.re_values)

    def scan_row(im: float) -> tuple[np.ndarray, np.ndarray, list[RegionStatus]]:
        z = re_values + 1j * im
        residual = log_region_residual(z)
        keep = ~np.isnan(residual)
        return z[keep], residual[keep], _statuses(z[keep], residual[keep])

    scan = LogRegionScan(grid=grid)
    for z, residual, status in ordered_map(scan_row, grid.im_values):
        scan.re.extend(z.real.tolist())
        scan.im.extend(z.imag.tolist())
        scan.residual.extend(residual.tolist())
        scan.status.extend(status)

    reach = max(
        abs(complex(re, im))
        for re in (grid.re_min, grid.re_max)
        for im in (grid.im_min, grid.im_max)
    )
    if rays > 0 and reach > RAY_START:
        angles = [2.0 * math.pi * j / rays for j in range(rays)]
        scan.crossings = ordered_map(lambda a: _ray_crossing(a, reach), angles)
    _LOGGER.info(
        f"log region scan points={len(scan.re)} failures={len(scan.failures)} "
        f"rays={rays}"
    )
    return scan


def first_crossing(angle: float, reach: float = 10.0) -> Optional[float]:
    """Radius of the first sign change of |z| - |ln(1 + z)| along angle."""
    return _ray_crossing(angle, reach).radius
