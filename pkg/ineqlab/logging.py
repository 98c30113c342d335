import logging
from typing import Optional

from .dataclass import BoundFamily, FamilyKey


def get_run_logger(
    name: str = "",
    family: Optional[BoundFamily | FamilyKey | str] = None,
    seed: Optional[int] = None,
):
    components = []
    if family is not None:
        if isinstance(family, BoundFamily):
            family = family.key
        if isinstance(family, FamilyKey):
            family = family.as_string()
        components.append(f"F-{family}")
    if seed is not None:
        components.append(f"S-{seed}")
    components.append(name)
    return logging.getLogger(":".join(components))
