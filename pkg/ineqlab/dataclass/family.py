import math
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from .base import LabDataClass


@dataclass
class Interval(LabDataClass):
    lo: float
    hi: float
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        self.lo = float(self.lo)
        self.hi = float(self.hi)
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise ValueError("Interval ends cannot be NaN")
        if math.isinf(self.lo):
            self.lo_closed = False
        if math.isinf(self.hi):
            self.hi_closed = False

    @property
    def empty(self) -> bool:
        if self.lo < self.hi:
            return False
        return not (self.lo == self.hi and self.lo_closed and self.hi_closed)

    def contains(self, x: float | np.ndarray) -> bool | np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        above = x >= self.lo if self.lo_closed else x > self.lo
        below = x <= self.hi if self.hi_closed else x < self.hi
        result = np.logical_and(above, below)
        return bool(result) if result.ndim == 0 else result

    def as_string(self) -> str:
        lo = "-inf" if math.isinf(self.lo) else repr(self.lo)
        hi = "inf" if math.isinf(self.hi) else repr(self.hi)
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{lo}, {hi}{right}"

    @classmethod
    def from_string(cls, s: str) -> "Interval":
        s = s.strip()
        if len(s) < 5 or s[0] not in "[(" or s[-1] not in "])":
            raise ValueError(f"Invalid interval: {s}")
        parts = s[1:-1].split(",")
        if len(parts) != 2:
            raise ValueError(f"Invalid interval: {s}")
        return cls(
            lo=float(parts[0]),
            hi=float(parts[1]),
            lo_closed=s[0] == "[",
            hi_closed=s[-1] == "]",
        )


@dataclass
class FamilyKey(LabDataClass):
    tag: str
    variant: Optional[str] = None

    def __post_init__(self):
        if ":" in self.tag:
            raise ValueError("Family tag cannot contain ':'")
        if self.variant is not None and ":" in self.variant:
            raise ValueError("Variant tag cannot contain ':'")

    def __hash__(self):
        return hash(self.as_string())

    def __eq__(self, other):
        if not isinstance(other, FamilyKey):
            return False
        return self.as_string() == other.as_string()

    def as_string(self) -> str:
        if self.variant is None:
            return self.tag
        return f"{self.tag}:{self.variant}"

    @classmethod
    def from_string(cls, s: str) -> "FamilyKey":
        if ":" in s:
            tag, variant = s.split(":", 1)
            return cls(tag=tag, variant=variant)
        return cls(tag=s)


@dataclass
class BoundFamily(LabDataClass):
    """A scalar inequality lhs <= rhs (lhs < rhs when strict) over a domain.

    lhs and rhs take one numpy array per domain coordinate. Complex families
    have two coordinates (re, im) and receive them as real arrays.
    """

    key: FamilyKey
    statement: str
    lhs: Callable[..., np.ndarray]
    rhs: Callable[..., np.ndarray]
    domain: list[Interval]
    strict: bool = False
    ordered: bool = False
    complex_plane: bool = False
    description: str = ""
    equality_points: list[float] = field(default_factory=list)

    def __post_init__(self):
        if len(self.statement) == 0:
            raise ValueError(f"Family {self.id} must have a statement")
        if len(self.domain) == 0:
            raise ValueError(f"Family {self.id} must have a domain")
        if self.ordered and len(self.domain) != 2:
            raise ValueError(f"Ordered family {self.id} must be two-dimensional")
        if self.complex_plane and len(self.domain) != 2:
            raise ValueError(f"Complex family {self.id} must have (re, im) domain")

    @property
    def id(self) -> str:
        return self.key.as_string()

    @property
    def dimension(self) -> int:
        return len(self.domain)

    def evaluate(self, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        points = np.asarray(points, dtype=np.float64).reshape(-1, self.dimension)
        coords = [points[:, i] for i in range(self.dimension)]
        with np.errstate(all="ignore"):
            lhs = np.asarray(self.lhs(*coords), dtype=np.float64)
            rhs = np.asarray(self.rhs(*coords), dtype=np.float64)
        shape = coords[0].shape
        return np.broadcast_to(lhs, shape), np.broadcast_to(rhs, shape)

    def in_domain(self, *coords: float) -> bool:
        if len(coords) != self.dimension:
            return False
        if not all(interval.contains(c) for interval, c in zip(self.domain, coords)):
            return False
        if self.ordered and not coords[0] > coords[1]:
            return False
        return True

    def as_json_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "statement": self.statement,
            "domain": [interval.as_string() for interval in self.domain],
            "strict": self.strict,
            "ordered": self.ordered,
            "complex_plane": self.complex_plane,
            "description": self.description,
            "equality_points": list(self.equality_points),
        }


@dataclass
class BoundChain(LabDataClass):
    """Expressions that are ordered increasingly on the whole domain."""

    id: str
    statement: str
    labels: list[str]
    terms: list[Callable[[np.ndarray], np.ndarray]]
    domain: Interval
    strict: bool = True
    equality_points: list[float] = field(default_factory=list)

    def __post_init__(self):
        if len(self.labels) != len(self.terms):
            raise ValueError(f"Chain {self.id} has {len(self.labels)} labels")
        if len(self.terms) < 2:
            raise ValueError(f"Chain {self.id} must have at least two terms")

    def as_json_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "statement": self.statement,
            "labels": list(self.labels),
            "domain": self.domain.as_string(),
            "strict": self.strict,
            "equality_points": list(self.equality_points),
        }


@dataclass
class SharpnessKnob(LabDataClass):
    """Names the constant of a family that a sharpness sweep perturbs.

    The form on `side` is rebuilt with `param` set to the perturbed value.
    """

    family_id: str
    side: str
    param: str
    default: float

    def __post_init__(self):
        if self.side not in ("lhs", "rhs"):
            raise ValueError(f"Knob side must be lhs or rhs, got {self.side}")
        self.default = float(self.default)
