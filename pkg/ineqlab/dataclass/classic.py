import enum
from dataclasses import dataclass
from typing import Any, Optional

from .base import LabDataClass


@dataclass
class InequalityCheck(LabDataClass):
    name: str
    lhs: float
    rhs: float
    holds: bool
    equality: bool = False

    @property
    def gap(self) -> float:
        return self.rhs - self.lhs


class YoungPreference(enum.Enum):
    PQ = "PQ"
    QP = "QP"
    TIE = "Tie"


class YoungCase(enum.Enum):
    BOTH_AT_LEAST_ONE = "both-at-least-one"
    BOTH_AT_MOST_ONE = "both-at-most-one"
    STRADDLE = "straddle"


@dataclass
class YoungVerdict(LabDataClass):
    """Which exponent assignment gives the tighter Young bound on xy.

    rhs_pq = x^p/p + y^q/q and rhs_qp = x^q/q + y^p/p.
    """

    x: float
    y: float
    p: float
    q: float
    rhs_pq: float
    rhs_qp: float
    product: float
    better: YoungPreference
    case: YoungCase
    y_cr: Optional[float] = None

    def __post_init__(self):
        self.better = YoungPreference(self.better)
        self.case = YoungCase(self.case)

    @classmethod
    def from_json_dict(cls, d: dict[str, Any]) -> "YoungVerdict":
        return cls.from_dict(dict(d))


@dataclass
class InductionCheck(LabDataClass):
    id: str
    statement: str
    n_min: int
    n_max: int
    holds: bool
    failures: list[int]
    worst_n: int
    worst_margin: float
