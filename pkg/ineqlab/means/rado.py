"""Certified ordering theorems for two-argument means.

Each check is built as one or more BoundFamily objects over positive
pairs and handed to the sampling certifier; two-sided statements are
merged into a single certificate.
"""

import math

import numpy as np

from ..cert import certify, merge_certificates
from ..dataclass import (
    BoundFamily,
    Certificate,
    FamilyKey,
    Interval,
    MeanKind,
    MeanSpec,
    SamplingStrategy,
)
from ..exceptions import ParameterError
from .evaluate import iterate_values, mean_values, profile_values

MEAN_DOMAIN = [
    Interval(lo=1e-3, hi=1e3, lo_closed=True, hi_closed=True),
    Interval(lo=1e-3, hi=1e3, lo_closed=True, hi_closed=True),
]
PROFILE_DOMAIN = [Interval(lo=-10, hi=10), Interval(lo=-10, hi=10)]

_AGM = (MeanSpec.power(1), MeanSpec.power(0))


def lagrange_exponent(alpha: float) -> float:
    """alpha ln 2 / ln(1 + alpha); ln 2 at alpha = 0."""
    if alpha == 0:
        return math.log(2)
    if alpha == math.inf:
        return math.inf
    if not alpha > -1:
        raise ParameterError(f"Exponent is undefined for alpha={alpha}")
    return alpha * math.log(2) / math.log1p(alpha)


def rado_theorem_bounds(alpha: float) -> tuple[float, float]:
    """Power-mean orders (p, q) with M_p <= R_alpha <= M_q."""
    if math.isnan(alpha):
        raise ParameterError("Rado theorem needs a parameter, got NaN")
    third = (alpha + 2) / 3
    if alpha <= -2:
        return third, 0.0
    if alpha <= -1:
        return 0.0, third
    if alpha <= -0.5:
        return lagrange_exponent(alpha), third
    if alpha < 1:
        return third, lagrange_exponent(alpha)
    return lagrange_exponent(alpha), third


def _mean_family(
    tag: str, variant: str, lower: MeanSpec, upper: MeanSpec
) -> BoundFamily:
    return BoundFamily(
        key=FamilyKey(tag=tag, variant=variant),
        statement=f"{lower.as_string()} <= {upper.as_string()}",
        lhs=lambda x, y: mean_values(lower, x, y),
        rhs=lambda x, y: mean_values(upper, x, y),
        domain=MEAN_DOMAIN,
    )


def _certify_chain(
    family_id: str, chain: list[MeanSpec], samples: int, seed: int
) -> Certificate:
    tag, _, variant = family_id.partition(":")
    certs = [
        certify(
            _mean_family(tag, f"{variant}/{i}" if variant else str(i), lower, upper),
            samples=samples,
            seed=seed,
            strategy=SamplingStrategy.LOG_UNIFORM,
        )
        for i, (lower, upper) in enumerate(zip(chain[:-1], chain[1:]))
    ]
    return merge_certificates(family_id, certs)


def _format(value: float) -> str:
    return format(value, "g")


def check_rado_bounds(alpha: float, samples: int = 10**4, seed: int = 0) -> Certificate:
    p, q = rado_theorem_bounds(alpha)
    chain = [MeanSpec.power(p), MeanSpec.rado(alpha), MeanSpec.power(q)]
    return _certify_chain(f"rado:{_format(alpha)}", chain, samples, seed)


def check_mean_scale(
    kind: MeanKind, params: list[float], samples: int = 10**4, seed: int = 0
) -> Certificate:
    """Certifies M_p <= M_q for consecutive parameters p < q of a scale."""
    kind = MeanKind(kind)
    if kind not in (MeanKind.POWER, MeanKind.RADO):
        raise ParameterError(f"No parameter scale for {kind.value} means")
    params = sorted(set(float(p) for p in params))
    if len(params) < 2:
        raise ParameterError("A scale check needs two distinct parameters")
    chain = [MeanSpec(kind=kind, params=[p]) for p in params]
    return _certify_chain(f"{kind.value}-scale", chain, samples, seed)


def check_zadl_bounds(samples: int = 10**4, seed: int = 0) -> Certificate:
    """G <= L <= M_{1/3} and M_{2/3} <= R_0 <= M_{ln 2}."""
    logarithmic = _certify_chain(
        "zadl:log",
        [MeanSpec.power(0), MeanSpec.rado(-1), MeanSpec.power(1 / 3)],
        samples,
        seed,
    )
    identric = _certify_chain(
        "zadl:identric",
        [MeanSpec.power(2 / 3), MeanSpec.rado(0), MeanSpec.power(math.log(2))],
        samples,
        seed,
    )
    return merge_certificates("zadl", [logarithmic, identric])


def check_agm_enclosure(samples: int = 10**4, seed: int = 0) -> Certificate:
    """L <= AGM <= M_{1/2}."""

    def agm(x, y):
        return iterate_values(*_AGM, x, y)[0]

    lower = BoundFamily(
        key=FamilyKey(tag="agm", variant="lower"),
        statement="L(x, y) <= AGM(x, y)",
        lhs=lambda x, y: mean_values(MeanSpec.rado(-1), x, y),
        rhs=agm,
        domain=MEAN_DOMAIN,
    )
    upper = BoundFamily(
        key=FamilyKey(tag="agm", variant="upper"),
        statement="AGM(x, y) <= M_1/2(x, y)",
        lhs=agm,
        rhs=lambda x, y: mean_values(MeanSpec.power(0.5), x, y),
        domain=MEAN_DOMAIN,
    )
    certs = [
        certify(f, samples=samples, seed=seed, strategy=SamplingStrategy.LOG_UNIFORM)
        for f in (lower, upper)
    ]
    return merge_certificates("agm", certs)


def check_profile_bounds(
    spec: MeanSpec, samples: int = 10**4, seed: int = 0
) -> Certificate:
    """Envelope of h(t1) / h(t2) for t1 < t2, points given as (t2, t1).

    Any monotone homogeneous mean has
    e^(t1 - t2) (e^t2 + 1) / (e^t1 + 1) <= h(t1) / h(t2) <= (e^t2 + 1) / (e^t1 + 1).
    """

    def ratio(t2, t1):
        return profile_values(spec, t1) / profile_values(spec, t2)

    def lower_bound(t2, t1):
        return np.exp(t1 - t2) * (np.exp(t2) + 1) / (np.exp(t1) + 1)

    def upper_bound(t2, t1):
        return (np.exp(t2) + 1) / (np.exp(t1) + 1)

    families = [
        BoundFamily(
            key=FamilyKey(tag="profile", variant=side),
            statement=statement,
            lhs=lhs,
            rhs=rhs,
            domain=PROFILE_DOMAIN,
            ordered=True,
        )
        for side, statement, lhs, rhs in [
            ("lower", "h(t1)/h(t2) >= lower envelope", lower_bound, ratio),
            ("upper", "h(t1)/h(t2) <= upper envelope", ratio, upper_bound),
        ]
    ]
    certs = [
        certify(f, samples=samples, seed=seed, strategy=SamplingStrategy.UNIFORM)
        for f in families
    ]
    return merge_certificates(f"profile:{spec.as_string()}", certs)
