import json
from dataclasses import asdict, dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Any

import numpy as np


def _as_json(o: Any) -> Any:
    if isinstance(o, LabDataClass):
        return o.as_json_dict()
    elif isinstance(o, Enum):
        return o.value
    elif isinstance(o, Fraction):
        return [o.numerator, o.denominator]
    elif isinstance(o, complex):
        return {"re": o.real, "im": o.imag}
    elif isinstance(o, np.generic):
        return _as_json(o.item())
    elif isinstance(o, np.ndarray):
        return [_as_json(v) for v in o.tolist()]
    elif isinstance(o, tuple):
        return tuple(_as_json(v) for v in o)
    elif isinstance(o, list):
        return [_as_json(v) for v in o]
    elif isinstance(o, dict):
        return {k: _as_json(v) for k, v in o.items()}
    return o


@dataclass
class LabDataClass:
    def as_dict(self) -> dict[str, Any]:
        """Returns dict of self."""
        return asdict(self)

    def as_json_dict(self) -> dict[str, Any]:
        """Returns dict of self with JSON-compatible leaves."""
        return _as_json(self.as_dict())

    def as_json(self) -> str:
        """Returns stable JSON text of self."""
        return json.dumps(self.as_json_dict(), sort_keys=True, indent=2)

    def copy(self, **kwargs) -> "LabDataClass":
        """Returns a copy of self."""
        return replace(self, **kwargs)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "LabDataClass":
        """Returns instance of self from dict."""
        return cls(**d)

    @classmethod
    def from_json_dict(cls, d: dict[str, Any]) -> "LabDataClass":
        """Returns instance of self from JSON dict."""
        return cls.from_dict(d)

    @classmethod
    def from_json(cls, json_str: str) -> "LabDataClass":
        """Returns instance of self from JSON string."""
        return cls.from_json_dict(json.loads(json_str))
