from .expansion import (
    a_series,
    asymptotic_limit,
    euler_gamma_estimate,
    expansion_coefficient_A,
    harmonic_expansion,
    pn_constant_decomposition,
    zeta_continuation,
)
from .extrapolate import richardson_estimates, richardson_limit, stable_limit
from .fixtures import (
    check_fixture,
    fixture_constant,
    fixture_registry,
    get_fixture,
    sl_bounds,
)
from .models import (
    euler_constant,
    extrapolated_constant,
    partial_sum,
    partial_sums,
    resolve_model,
    series_registry,
)

__all__ = [
    "a_series",
    "asymptotic_limit",
    "check_fixture",
    "euler_constant",
    "euler_gamma_estimate",
    "expansion_coefficient_A",
    "extrapolated_constant",
    "fixture_constant",
    "fixture_registry",
    "get_fixture",
    "harmonic_expansion",
    "partial_sum",
    "partial_sums",
    "pn_constant_decomposition",
    "resolve_model",
    "richardson_estimates",
    "richardson_limit",
    "series_registry",
    "sl_bounds",
    "stable_limit",
    "zeta_continuation",
]
