from .amgm import (
    amgm_classify,
    amgm_modulus_classify,
    amgm_residual,
    axis_intervals,
    modulus_form_holds,
    polar_curve,
    quartic_residual,
    quartic_scale,
)
from .epsplane import eps_complex, eps_complex_sup, eps_complex_values
from .logregion import (
    first_crossing,
    log_region_classify,
    log_region_residual,
    log_region_scan,
)

__all__ = [
    "amgm_classify",
    "amgm_modulus_classify",
    "amgm_residual",
    "axis_intervals",
    "eps_complex",
    "eps_complex_sup",
    "eps_complex_values",
    "first_crossing",
    "log_region_classify",
    "log_region_residual",
    "log_region_scan",
    "modulus_form_holds",
    "polar_curve",
    "quartic_residual",
    "quartic_scale",
]
