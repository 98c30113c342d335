"""The complex AM-GM inequality |s| <= |(s + 1)/2|^2 with s = w/z.

Its boundary is the quartic
x^4 + y^4 + 2x^2y^2 + 4x^3 + 4xy^2 - 10x^2 - 14y^2 + 4x + 1 = 0,
which in polar form is r^2 - 2(2 - cos phi) r + 1 = 0.
"""

import logging
import math
from typing import Callable

import numpy as np

from ..dataclass import ComplexPoint, Interval, RegionStatus, RegionVerdict
from ..solve import bisect

_LOGGER = logging.getLogger(__name__)

BOUNDARY_TOLERANCE = 1e-9
AXIS_REACH = 100.0
AXIS_POINTS = 200_001
ENDPOINT_TOLERANCE = 1e-13

PointLike = ComplexPoint | complex | float


def as_complex(s: PointLike) -> complex:
    if isinstance(s, ComplexPoint):
        return s.value
    return complex(s)


def _verdict(residual: float, scale: float) -> RegionVerdict:
    if abs(residual) <= BOUNDARY_TOLERANCE * scale:
        status = RegionStatus.BOUNDARY
    elif residual > 0:
        status = RegionStatus.OUTSIDE
    else:
        status = RegionStatus.INSIDE
    return RegionVerdict(status=status, residual=float(residual))


def amgm_residual(s: np.ndarray) -> np.ndarray:
    """|(s + 1)/2|^2 - |s| as ((|s| - 1)^2 - 2(|s| - Re s)) / 4.

    The rewrite is exactly nonnegative on the positive real axis.
    """
    s = np.asarray(s, dtype=np.complex128)
    r, x, y = np.abs(s), s.real, s.imag
    with np.errstate(divide="ignore", invalid="ignore"):
        gap = np.where(x > 0, y * y / (r + x), r - x)
    return 0.25 * ((r - 1.0) ** 2 - 2.0 * gap)


def amgm_classify(s: PointLike) -> RegionVerdict:
    s = as_complex(s)
    return _verdict(float(amgm_residual(s)), 1.0 + abs(s) ** 2)


def amgm_modulus_classify(s: PointLike) -> RegionVerdict:
    """|s| <= ((|s| + 1)/2)^2, whose residual is ((|s| - 1)/2)^2."""
    t = abs(as_complex(s))
    return _verdict(0.25 * (t - 1.0) ** 2, 1.0 + t**2)


def modulus_form_holds(z: PointLike, w: PointLike) -> RegionVerdict:
    """|zw| <= |(z + w)/2|^2, the form before substituting s = w/z."""
    z, w = as_complex(z), as_complex(w)
    residual = abs(0.5 * (z + w)) ** 2 - abs(z * w)
    return _verdict(residual, abs(z) ** 2 + abs(w) ** 2)


def quartic_residual(s: PointLike) -> float:
    s = as_complex(s)
    x, y = s.real, s.imag
    x2, y2 = x * x, y * y
    return (
        x2 * x2
        + y2 * y2
        + 2 * x2 * y2
        + 4 * x2 * x
        + 4 * x * y2
        - 10 * x2
        - 14 * y2
        + 4 * x
        + 1
    )


def quartic_scale(s: PointLike) -> float:
    return 1.0 + abs(as_complex(s)) ** 4


def polar_curve(phi: float) -> tuple[float, float]:
    """Radii r_minus <= r_plus of the boundary along direction phi."""
    c = 2.0 - math.cos(phi)
    r_plus = c + math.sqrt((c - 1.0) * (c + 1.0))
    return 1.0 / r_plus, r_plus


def _axis_endpoints(residual: Callable[[np.ndarray], np.ndarray]) -> list[float]:
    t = np.linspace(-AXIS_REACH, AXIS_REACH, AXIS_POINTS)
    values = residual(t)
    changes = np.flatnonzero(values[:-1] * values[1:] < 0)
    endpoints = []
    for i in changes:
        trace = bisect(
            lambda u: float(residual(np.array([u]))[0]),
            t[i],
            t[i + 1],
            tol=ENDPOINT_TOLERANCE,
        )
        endpoints.append(trace.root)
    return endpoints


def _holding_intervals(
    residual: Callable[[np.ndarray], np.ndarray], endpoints: list[float]
) -> list[Interval]:
    ends = [-math.inf] + endpoints + [math.inf]
    intervals = []
    for lo, hi in zip(ends[:-1], ends[1:]):
        if math.isinf(lo):
            sample = hi - 1.0
        elif math.isinf(hi):
            sample = lo + 1.0
        else:
            sample = 0.5 * (lo + hi)
        if residual(np.array([sample]))[0] >= 0:
            intervals.append(Interval(lo=lo, hi=hi, lo_closed=True, hi_closed=True))
    return intervals


def axis_intervals() -> tuple[list[Interval], list[Interval]]:
    """Where the inequality holds on the real and on the imaginary axis.

    Endpoints are the sign changes of the residual, located by a scan and
    refined by bisection; touching zeros such as s = 1 do not split an
    interval.
    """

    def real(t: np.ndarray) -> np.ndarray:
        return amgm_residual(t.astype(np.complex128))

    def imag(t: np.ndarray) -> np.ndarray:
        return amgm_residual(1j * t)

    result = []
    for name, residual in (("real", real), ("imag", imag)):
        endpoints = _axis_endpoints(residual)
        intervals = _holding_intervals(residual, endpoints)
        _LOGGER.info(
            f"{name} axis endpoints={endpoints} "
            f"intervals={[i.as_string() for i in intervals]}"
        )
        result.append(intervals)
    return result[0], result[1]
