import math
from dataclasses import dataclass, field
from typing import Optional

from .base import LabDataClass


@dataclass
class SolveTrace(LabDataClass):
    """Iterates of a scalar solver.

    residual is the last step length for open methods and the final bracket
    width for bracketing methods.
    """

    method: str
    iterates: list[float] = field(default_factory=list)
    converged: bool = False
    residual: float = math.inf
    iterations: int = 0
    tolerance: Optional[float] = None

    @property
    def root(self) -> float:
        if len(self.iterates) == 0:
            raise ValueError("Trace has no iterates")
        return self.iterates[-1]

    @property
    def estimated_order(self) -> Optional[float]:
        """Order p from the last three step lengths, |d_k| ~ |d_{k-1}|^p."""
        steps = [
            abs(b - a) for a, b in zip(self.iterates[:-1], self.iterates[1:])
        ]
        steps = [s for s in steps if s > 0]
        if len(steps) < 3:
            return None
        d0, d1, d2 = steps[-3:]
        if d0 == d1 or d0 >= 1 or d1 >= 1:
            return None
        return math.log(d2 / d1) / math.log(d1 / d0)
