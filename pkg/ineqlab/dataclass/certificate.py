import enum
from dataclasses import dataclass, field
from typing import Any, Optional

from .base import LabDataClass


class SamplingStrategy(enum.Enum):
    UNIFORM = "uniform"
    LOG_UNIFORM = "log-uniform"
    GRID = "grid"


@dataclass
class Certificate(LabDataClass):
    family_id: str
    samples: int
    seed: int
    strategy: SamplingStrategy
    holds: bool
    worst_gap: float
    worst_point: list[float]
    worst_slack: float
    counterexamples: list[list[float]] = field(default_factory=list)
    failures: int = 0
    strict_violations: int = 0
    skipped: int = 0

    def __post_init__(self):
        self.strategy = SamplingStrategy(self.strategy)

    @classmethod
    def from_json_dict(cls, d: dict[str, Any]) -> "Certificate":
        d = dict(d)
        d["strategy"] = SamplingStrategy(d["strategy"])
        return cls.from_dict(d)


@dataclass
class SharpnessRow(LabDataClass):
    delta: float
    holds: bool
    worst_gap: float
    worst_point: Optional[list[float]] = None
