import logging
from typing import Optional

import numpy as np

from ..cert import certify, merge_certificates
from ..dataclass import BoundChain, BoundFamily, Certificate, FamilyKey, SharpnessKnob
from ..exceptions import DomainError
from ..registry import get_bound_registry, get_chain, get_sharpness_knobs

_LOGGER = logging.getLogger(__name__)


def bound_registry() -> list[BoundFamily]:
    """Every registered logarithm and e family, ordered by id."""
    registry = get_bound_registry()
    return [registry[key] for key in sorted(registry, key=lambda k: k.as_string())]


def sharpness_knobs() -> dict[str, SharpnessKnob]:
    return get_sharpness_knobs()


def eval_chain(chain_id: str, x: float) -> list[tuple[str, float]]:
    chain = get_chain(chain_id)
    if not chain.domain.contains(x):
        raise DomainError(
            f"{x} is outside the domain {chain.domain.as_string()} of {chain_id}"
        )
    point = np.array([float(x)])
    with np.errstate(all="ignore"):
        values = [float(term(point)[0]) for term in chain.terms]
    return list(zip(chain.labels, values))


def chain_families(chain: BoundChain) -> list[BoundFamily]:
    """Splits a chain into one family per neighbouring pair of terms."""
    return [
        BoundFamily(
            key=FamilyKey(tag=chain.id, variant=str(i)),
            statement=f"{lower} <= {upper}",
            lhs=lhs,
            rhs=rhs,
            domain=[chain.domain],
            strict=chain.strict,
            equality_points=list(chain.equality_points),
        )
        for i, (lower, upper, lhs, rhs) in enumerate(
            zip(chain.labels[:-1], chain.labels[1:], chain.terms[:-1], chain.terms[1:])
        )
    ]


def certify_chain(
    chain_id: str, samples: int = 10**4, seed: int = 0
) -> Certificate:
    chain = get_chain(chain_id)
    certs = [
        certify(family, samples=samples, seed=seed)
        for family in chain_families(chain)
    ]
    cert = merge_certificates(chain_id, certs)
    _LOGGER.info(f"chain {chain_id} holds={cert.holds} worst_gap={cert.worst_gap}")
    return cert


def certify_registry(
    samples: int = 10**4, seed: int = 0, prefix: Optional[str] = None
) -> list[Certificate]:
    families = bound_registry()
    if prefix is not None:
        families = [f for f in families if f.id.startswith(prefix)]
        if len(families) == 0:
            raise DomainError(f"No family id starts with {prefix}")
    return [certify(family, samples=samples, seed=seed) for family in families]
