"""Rendering of command results as text, JSON or CSV.

Commands return a scalar, a mapping, a LabDataClass, a list of those, or a
DataFrame. Every format is a pure function of the result, so identical
invocations produce identical bytes.
"""

import json
import math
from typing import Any

import numpy as np
import pandas as pd

from ..dataclass import LabDataClass, OutputFormat
from ..helper import format_number

_FLOAT_FORMAT = "%.17g"


def _is_scalar(result: Any) -> bool:
    return isinstance(result, (bool, int, float, np.generic))


def _json_ready(result: Any) -> Any:
    if isinstance(result, pd.DataFrame):
        return [_json_ready(row) for row in result.to_dict(orient="records")]
    if isinstance(result, LabDataClass):
        return result.as_json_dict()
    if isinstance(result, dict):
        return {str(k): _json_ready(v) for k, v in result.items()}
    if isinstance(result, (list, tuple)):
        return [_json_ready(v) for v in result]
    if isinstance(result, np.generic):
        return result.item()
    return result


def _cell(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return " ".join(str(_cell(v)) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return value


def as_frame(result: Any) -> pd.DataFrame:
    """Flattens a result into one table; records become a single row."""
    if isinstance(result, pd.DataFrame):
        return result
    if _is_scalar(result):
        return pd.DataFrame({"value": [result]})
    data = _json_ready(result)
    rows = data if isinstance(data, list) else [data]
    rows = [r if isinstance(r, dict) else {"value": r} for r in rows]
    frame = pd.json_normalize(rows)
    return frame.apply(lambda column: column.map(_cell))


def _format_cell(value: Any) -> str:
    if isinstance(value, (bool, np.bool_, int, np.integer)):
        return format_number(value)
    if isinstance(value, (float, np.floating)):
        if math.isnan(value):
            return "nan"
        return format_number(value)
    return str(value)


def render_text(result: Any) -> str:
    if _is_scalar(result):
        return format_number(result) + "\n"
    frame = as_frame(result)
    if not isinstance(result, pd.DataFrame) and len(frame) == 1:
        width = max(len(str(c)) for c in frame.columns)
        lines = [
            f"{str(c).ljust(width)}  {_format_cell(v)}"
            for c, v in zip(frame.columns, frame.iloc[0].tolist())
        ]
        return "\n".join(lines) + "\n"
    formatters = {c: _format_cell for c in frame.columns}
    return frame.to_string(index=False, formatters=formatters) + "\n"


def render_json(result: Any) -> str:
    return json.dumps(_json_ready(result), sort_keys=True, indent=2) + "\n"


def render_csv(result: Any) -> str:
    return as_frame(result).to_csv(
        index=False, float_format=_FLOAT_FORMAT, lineterminator="\n"
    )


def render(result: Any, output: OutputFormat | str) -> str:
    output = OutputFormat(output)
    if output == OutputFormat.JSON:
        return render_json(result)
    if output == OutputFormat.CSV:
        return render_csv(result)
    return render_text(result)
