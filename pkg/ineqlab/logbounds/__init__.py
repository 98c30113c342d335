from .contfrac import (
    cf_convergent,
    cf_eval,
    cf_values,
    check_cf_enclosure,
    check_cf_refinement,
)
from .eps import (
    EpsFamily,
    eps_defect,
    eps_eval,
    eps_level_point,
    eps_reflected,
    eps_taylor_bound,
    eps_taylor_enclosure,
)
from .factorial_series import sqrt_factorial_series
from .families import (
    bound_registry,
    certify_chain,
    certify_registry,
    chain_families,
    eval_chain,
    sharpness_knobs,
)

__all__ = [
    "EpsFamily",
    "bound_registry",
    "certify_chain",
    "certify_registry",
    "cf_convergent",
    "cf_eval",
    "cf_values",
    "chain_families",
    "check_cf_enclosure",
    "check_cf_refinement",
    "eps_defect",
    "eps_eval",
    "eps_level_point",
    "eps_reflected",
    "eps_taylor_bound",
    "eps_taylor_enclosure",
    "sharpness_knobs",
    "sqrt_factorial_series",
]
