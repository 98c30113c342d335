import enum
import pathlib
from dataclasses import dataclass, field
from typing import Any, Optional

from .base import LabDataClass


class OutputFormat(enum.Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


@dataclass
class RunConfig(LabDataClass):
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    output: OutputFormat = OutputFormat.TEXT
    out_path: Optional[pathlib.Path] = None

    def __post_init__(self):
        self.output = OutputFormat(self.output)
        if self.out_path is not None:
            self.out_path = pathlib.Path(self.out_path)

    def as_json_dict(self) -> dict[str, Any]:
        d = super().as_json_dict()
        if self.out_path is not None:
            d["out_path"] = str(self.out_path)
        return d
