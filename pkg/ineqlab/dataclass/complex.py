import enum
import math
from dataclasses import dataclass, field
from typing import Any, Optional

from .base import LabDataClass


@dataclass
class ComplexPoint(LabDataClass):
    re: float
    im: float

    def __post_init__(self):
        self.re = float(self.re)
        self.im = float(self.im)
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError(
                f"Complex point must be finite, got ({self.re}, {self.im})"
            )

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def conjugate(self) -> "ComplexPoint":
        return ComplexPoint(re=self.re, im=-self.im)

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexPoint":
        return cls(re=z.real, im=z.imag)


class RegionStatus(enum.Enum):
    """Position relative to the failure set of a region inequality.

    INSIDE is where the inequality fails. OUTSIDE is where it holds strictly.
    """

    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass
class RegionVerdict(LabDataClass):
    """Classification against a region inequality lhs <= rhs.

    residual is rhs - lhs: OUTSIDE means the inequality holds strictly,
    INSIDE means it fails.
    """

    status: RegionStatus
    residual: float

    def __post_init__(self):
        self.status = RegionStatus(self.status)

    @property
    def holds(self) -> bool:
        return self.status != RegionStatus.INSIDE


@dataclass
class ScanGrid(LabDataClass):
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    nx: int
    ny: int

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1:
            raise ValueError("Scan grid needs at least one point per axis")
        if self.re_min > self.re_max or self.im_min > self.im_max:
            raise ValueError("Scan grid bounds are reversed")

    @property
    def re_values(self) -> list[float]:
        return _axis(self.re_min, self.re_max, self.nx)

    @property
    def im_values(self) -> list[float]:
        return _axis(self.im_min, self.im_max, self.ny)


def _axis(lo: float, hi: float, n: int) -> list[float]:
    if n == 1:
        return [0.5 * (lo + hi)]
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


@dataclass
class RayCrossing(LabDataClass):
    angle: float
    radius: Optional[float]


@dataclass
class LogRegionScan(LabDataClass):
    """Grid verdicts for |ln(1+z)| <= |z| plus per-ray sign changes."""

    grid: ScanGrid
    re: list[float] = field(default_factory=list)
    im: list[float] = field(default_factory=list)
    residual: list[float] = field(default_factory=list)
    status: list[RegionStatus] = field(default_factory=list)
    crossings: list[RayCrossing] = field(default_factory=list)

    @property
    def failures(self) -> list[ComplexPoint]:
        return [
            ComplexPoint(re=r, im=i)
            for r, i, s in zip(self.re, self.im, self.status)
            if s == RegionStatus.INSIDE
        ]

    def as_json_dict(self) -> dict[str, Any]:
        return {
            "grid": self.grid.as_json_dict(),
            "points": len(self.re),
            "failures": sum(1 for s in self.status if s == RegionStatus.INSIDE),
            "crossings": [c.as_json_dict() for c in self.crossings],
        }
