from .induction import (
    InductionFixture,
    check_induction,
    get_induction_fixture,
    induction_fixtures,
)
from .vectors import (
    cauchy_bunyakovsky,
    conjugate_exponent,
    holder,
    minkowski,
    vector_sweep,
)
from .young import (
    check_young_validity,
    young_compare,
    young_critical_point,
    young_sides,
)

__all__ = [
    "InductionFixture",
    "cauchy_bunyakovsky",
    "check_induction",
    "check_young_validity",
    "conjugate_exponent",
    "get_induction_fixture",
    "holder",
    "induction_fixtures",
    "minkowski",
    "vector_sweep",
    "young_compare",
    "young_critical_point",
    "young_sides",
]
