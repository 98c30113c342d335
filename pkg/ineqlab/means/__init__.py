from .evaluate import (
    conjugate_values,
    mean_conjugate,
    mean_eval,
    mean_profile_h,
    mean_values,
    profile_values,
    quasi_arithmetic_eval,
)
from .generators import generator_names, get_generator
from .iterate import agm_closed_form, elliptic_K, iterate_mean
from .rado import (
    check_agm_enclosure,
    check_mean_scale,
    check_profile_bounds,
    check_rado_bounds,
    check_zadl_bounds,
    rado_theorem_bounds,
)

__all__ = [
    "agm_closed_form",
    "check_agm_enclosure",
    "check_mean_scale",
    "check_profile_bounds",
    "check_rado_bounds",
    "check_zadl_bounds",
    "conjugate_values",
    "elliptic_K",
    "generator_names",
    "get_generator",
    "iterate_mean",
    "mean_conjugate",
    "mean_eval",
    "mean_profile_h",
    "mean_values",
    "profile_values",
    "quasi_arithmetic_eval",
    "rado_theorem_bounds",
]
