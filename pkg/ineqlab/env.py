import logging
import os
from typing import Optional


def _parse_threads(value: Optional[str]) -> int:
    if value is None or value.strip() == "":
        return max(1, os.cpu_count() or 1)
    threads = int(value)
    if threads < 1:
        raise ValueError(f"INEQLAB_THREADS must be positive, got {value}")
    return threads


THREADS = _parse_threads(os.getenv("INEQLAB_THREADS"))
LOG_LEVEL = getattr(logging, os.getenv("INEQLAB_LOG_LEVEL", "INFO").upper(), None)
if not isinstance(LOG_LEVEL, int):
    LOG_LEVEL = logging.INFO
