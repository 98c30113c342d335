import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .base import LabDataClass


@dataclass
class BernoulliTable(LabDataClass):
    """Exact B_0..B_m with B_1 = -1/2."""

    values: list[Fraction] = field(default_factory=list)

    @property
    def upto(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def generating_series(self, x: float) -> float:
        """1 - x/2 + sum_{2k <= m} B_{2k} x^{2k} / (2k)!."""
        total = [1.0, -0.5 * x]
        for k in range(2, self.upto + 1, 2):
            total.append(float(self.values[k] / math.factorial(k)) * x**k)
        return math.fsum(total)

    def generating_residual(self, x: float) -> float:
        return abs(self.generating_series(x) - x / math.expm1(x))

    def as_json_dict(self) -> dict[str, Any]:
        return {"values": [[v.numerator, v.denominator] for v in self.values]}

    @classmethod
    def from_json_dict(cls, d: dict[str, Any]) -> "BernoulliTable":
        return cls(values=[Fraction(n, m) for n, m in d["values"]])
