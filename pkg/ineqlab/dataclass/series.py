import enum
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from ..exceptions import SeriesModelError
from .base import LabDataClass

_DERIVATIVE_STEP = 1e-4
_DERIVATIVE_RTOL = 1e-6

EULER_CONSTANT = "euler"


@dataclass
class SeriesModel(LabDataClass):
    """Positive decreasing series sum_{k >= start} f(k) with F(start) = 0."""

    id: str
    term: Callable[[np.ndarray], np.ndarray]
    antiderivative: Callable[[np.ndarray], np.ndarray]
    start: int = 1
    params: list[float] = field(default_factory=list)
    divergent: bool = True
    description: str = ""

    def __post_init__(self):
        if self.start < 1:
            raise SeriesModelError(f"Series {self.id} must start at k >= 1")
        k = np.arange(self.start, self.start + 64, dtype=np.float64)
        k = np.concatenate([k, np.geomspace(self.start + 64, 1e6, 32)])
        with np.errstate(all="ignore"):
            f = np.asarray(self.term(k), dtype=np.float64)
        if not np.all(np.isfinite(f)) or not np.all(f > 0):
            raise SeriesModelError(f"Series {self.id} term must be positive")
        if not np.all(np.diff(f) < 0):
            raise SeriesModelError(f"Series {self.id} term must be decreasing")
        origin = float(self.antiderivative(np.float64(self.start)))
        if abs(origin) > 1e-12:
            raise SeriesModelError(
                f"Series {self.id} antiderivative must vanish at k={self.start}, "
                f"got {origin}"
            )
        x = np.array([1.5, 3.0, 10.0, 100.0, 1000.0]) + (self.start - 1)
        h = _DERIVATIVE_STEP * x
        derivative = (self.antiderivative(x + h) - self.antiderivative(x - h)) / (2 * h)
        if not np.allclose(derivative, self.term(x), rtol=_DERIVATIVE_RTOL, atol=0):
            raise SeriesModelError(
                f"Series {self.id} antiderivative does not match its term"
            )

    def as_json_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "start": self.start,
            "params": list(self.params),
            "divergent": self.divergent,
            "description": self.description,
        }


@dataclass
class ConstantEnclosure(LabDataClass):
    lower: float
    upper: float
    n_used: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"Invalid enclosure [{self.lower}, {self.upper}]")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper


class BoundSide(enum.Enum):
    """Which argument the integral-test envelope is evaluated at."""

    AT_N = "n"
    AT_N_PLUS_1 = "n+1"


@dataclass
class SLBound(LabDataClass):
    """One side of a two-sided bound G(m) + c + coef * f(n+1) around S_n.

    m is n or n+1 depending on side; G is the model antiderivative unless
    the fixture names an envelope.
    """

    side: BoundSide
    constant: float | str
    strict: bool
    term_coefficient: float = 0.0

    def __post_init__(self):
        self.side = BoundSide(self.side)
        self.term_coefficient = float(self.term_coefficient)
        if isinstance(self.constant, str):
            if self.constant != EULER_CONSTANT:
                raise ValueError(
                    f"Bound constant must be a number or '{EULER_CONSTANT}', "
                    f"got {self.constant}"
                )
        else:
            self.constant = float(self.constant)

    @property
    def symbolic(self) -> bool:
        return isinstance(self.constant, str)


@dataclass
class SLFixture(LabDataClass):
    id: str
    model_id: str
    statement: str
    lower: SLBound
    upper: SLBound
    n_min: int = 1
    n_max: int = 10**4
    envelope: Optional[str] = None

    @classmethod
    def from_json_dict(cls, d: dict[str, Any]) -> "SLFixture":
        d = dict(d)
        d["lower"] = SLBound.from_json_dict(d["lower"])
        d["upper"] = SLBound.from_json_dict(d["upper"])
        return cls.from_dict(d)


@dataclass
class SLVerdict(LabDataClass):
    n: int
    lower: float
    value: float
    upper: float
    holds: bool
    lower_equality: bool = False
    upper_equality: bool = False


@dataclass
class SLSweep(LabDataClass):
    fixture_id: str
    n_min: int
    n_max: int
    holds: bool
    failures: list[int] = field(default_factory=list)
    lower_equalities: list[int] = field(default_factory=list)
    upper_equalities: list[int] = field(default_factory=list)
    worst_lower_margin: float = float("inf")
    worst_upper_margin: float = float("inf")


@dataclass
class PnConstantDecomposition(LabDataClass):
    """Euler constant of sum 1/sqrt(k(k+1)) against C - A.

    a_value sums the convergent series of 1/k - 1/sqrt(k(k+1)).
    """

    n: int
    c1_estimate: float
    c1_enclosure: ConstantEnclosure
    euler_c: float
    a_value: float
    a_tail_bound: float

    @property
    def c_minus_a(self) -> float:
        return self.euler_c - self.a_value

    @property
    def discrepancy(self) -> float:
        return abs(self.c1_estimate - self.c_minus_a)

    @property
    def agrees(self) -> bool:
        return self.discrepancy <= self.c1_enclosure.width + self.a_tail_bound

    def as_json_dict(self) -> dict[str, Any]:
        d = super().as_json_dict()
        d["c_minus_a"] = self.c_minus_a
        d["discrepancy"] = self.discrepancy
        d["agrees"] = self.agrees
        return d
