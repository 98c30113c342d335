import enum
import math
from dataclasses import dataclass, field
from typing import Any, Optional

from .base import LabDataClass

WEIGHT_TOLERANCE = 1e-12


class MeanKind(enum.Enum):
    POWER = "power"
    RADO = "rado"
    GINI = "gini"
    LEHMER = "lehmer"
    HERON = "heron"
    WEIGHTED_ARITH = "weighted-arith"
    WEIGHTED_GEOM = "weighted-geom"
    QUASI_ARITH = "quasi-arith"
    ITERATED = "iterated"


class MeanBranch(enum.Enum):
    GENERIC = "generic"
    LIMIT_CASE = "limit-case"


_SYMMETRIC_KINDS = {
    MeanKind.POWER,
    MeanKind.RADO,
    MeanKind.GINI,
    MeanKind.LEHMER,
    MeanKind.HERON,
}

_PARAM_COUNTS = {
    MeanKind.POWER: 1,
    MeanKind.RADO: 1,
    MeanKind.GINI: 2,
    MeanKind.LEHMER: 1,
    MeanKind.HERON: 0,
    MeanKind.WEIGHTED_ARITH: 2,
    MeanKind.WEIGHTED_GEOM: 2,
}


def _parse_param(s: str) -> float:
    s = s.strip()
    if s in ("inf", "+inf"):
        return math.inf
    if s == "-inf":
        return -math.inf
    return float(s)


def _format_param(v: float) -> str:
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return repr(float(v)) if v != int(v) else str(int(v))


@dataclass
class MeanSpec(LabDataClass):
    """Tagged descriptor of a two-argument mean.

    Quasi-arithmetic means carry a generator name and weights; iterated
    means carry the two component specs whose interleaved iteration
    defines the limit.
    """

    kind: MeanKind
    params: list[float] = field(default_factory=list)
    generator: Optional[str] = None
    weights: list[float] = field(default_factory=list)
    components: list["MeanSpec"] = field(default_factory=list)

    def __post_init__(self):
        self.kind = MeanKind(self.kind)
        self.params = [float(p) for p in self.params]
        self.weights = [float(w) for w in self.weights]
        expected = _PARAM_COUNTS.get(self.kind)
        if expected is not None and len(self.params) != expected:
            raise ValueError(
                f"{self.kind.value} mean takes {expected} parameters, "
                f"got {len(self.params)}"
            )
        if self.kind in (MeanKind.WEIGHTED_ARITH, MeanKind.WEIGHTED_GEOM):
            self._check_weights(self.params)
        if self.kind == MeanKind.QUASI_ARITH:
            if self.generator is None:
                raise ValueError("Quasi-arithmetic mean requires a generator")
            if len(self.weights) == 0:
                self.weights = [0.5, 0.5]
            self._check_weights(self.weights)
        if self.kind == MeanKind.ITERATED and len(self.components) != 2:
            raise ValueError("Iterated mean requires two component means")
        for p in self.params:
            if math.isnan(p):
                raise ValueError("Mean parameters cannot be NaN")
            if math.isinf(p) and self.kind not in (MeanKind.POWER, MeanKind.RADO):
                raise ValueError(f"{self.kind.value} mean takes finite parameters")

    @staticmethod
    def _check_weights(weights: list[float]):
        if any(w < 0 for w in weights):
            raise ValueError(f"Weights must be nonnegative, got {weights}")
        if abs(math.fsum(weights) - 1.0) > WEIGHT_TOLERANCE:
            raise ValueError(f"Weights must sum to 1, got {weights}")

    @property
    def symmetric(self) -> bool:
        if self.kind == MeanKind.QUASI_ARITH:
            return len(set(self.weights)) == 1
        return self.kind in _SYMMETRIC_KINDS

    def __hash__(self):
        return hash(self.as_string())

    def __eq__(self, other):
        if not isinstance(other, MeanSpec):
            return False
        return self.as_string() == other.as_string()

    def as_string(self) -> str:
        if self.kind == MeanKind.ITERATED:
            inner = ",".join(c.as_string() for c in self.components)
            return f"iterated({inner})"
        if self.kind == MeanKind.QUASI_ARITH:
            weights = ":".join(_format_param(w) for w in self.weights)
            return f"quasi-arith:{self.generator}:{weights}"
        return ":".join([self.kind.value] + [_format_param(p) for p in self.params])

    @classmethod
    def from_string(cls, s: str) -> "MeanSpec":
        s = s.strip()
        if s.startswith("iterated(") and s.endswith(")"):
            inner = s[len("iterated(") : -1]
            depth = 0
            for i, ch in enumerate(inner):
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                elif ch == "," and depth == 0:
                    return cls(
                        kind=MeanKind.ITERATED,
                        components=[
                            cls.from_string(inner[:i]),
                            cls.from_string(inner[i + 1 :]),
                        ],
                    )
            raise ValueError(f"Invalid iterated mean: {s}")
        parts = s.split(":")
        kind = MeanKind(parts[0])
        if kind == MeanKind.QUASI_ARITH:
            if len(parts) < 2:
                raise ValueError(f"Invalid quasi-arithmetic mean: {s}")
            generator, weights = parts[1], parts[2:]
            # Parametrized generators such as power:3 keep their parameter.
            if generator == "power" and len(weights) > 0:
                generator = f"power:{weights[0]}"
                weights = weights[1:]
            return cls(
                kind=kind,
                generator=generator,
                weights=[_parse_param(w) for w in weights],
            )
        return cls(kind=kind, params=[_parse_param(p) for p in parts[1:]])

    def as_json_dict(self) -> dict[str, Any]:
        return {"spec": self.as_string()}

    @classmethod
    def from_json_dict(cls, d: dict[str, Any]) -> "MeanSpec":
        return cls.from_string(d["spec"])

    @classmethod
    def power(cls, alpha: float) -> "MeanSpec":
        return cls(kind=MeanKind.POWER, params=[alpha])

    @classmethod
    def rado(cls, beta: float) -> "MeanSpec":
        return cls(kind=MeanKind.RADO, params=[beta])

    @classmethod
    def gini(cls, u: float, v: float) -> "MeanSpec":
        return cls(kind=MeanKind.GINI, params=[u, v])

    @classmethod
    def lehmer(cls, u: float) -> "MeanSpec":
        return cls(kind=MeanKind.LEHMER, params=[u])

    @classmethod
    def heron(cls) -> "MeanSpec":
        return cls(kind=MeanKind.HERON)

    @classmethod
    def weighted_arith(cls, a: float, b: float) -> "MeanSpec":
        return cls(kind=MeanKind.WEIGHTED_ARITH, params=[a, b])

    @classmethod
    def weighted_geom(cls, a: float, b: float) -> "MeanSpec":
        return cls(kind=MeanKind.WEIGHTED_GEOM, params=[a, b])

    @classmethod
    def quasi_arith(
        cls, generator: str, weights: Optional[list[float]] = None
    ) -> "MeanSpec":
        return cls(
            kind=MeanKind.QUASI_ARITH, generator=generator, weights=weights or []
        )

    @classmethod
    def iterated(cls, m: "MeanSpec", n: "MeanSpec") -> "MeanSpec":
        return cls(kind=MeanKind.ITERATED, components=[m, n])


@dataclass
class MeanValueReport(LabDataClass):
    value: float
    branch: MeanBranch = MeanBranch.GENERIC
    iterations: Optional[int] = None

    def __post_init__(self):
        self.branch = MeanBranch(self.branch)
