from dataclasses import dataclass
from typing import Any

from .base import LabDataClass


@dataclass
class Convergent(LabDataClass):
    """R_n = P_n / Q_n of the continued fraction of ln(1+x).

    Coefficients are listed from the constant term upward. Beyond the exact
    range they are extended-precision floats and exact is False.
    """

    n: int
    p_coeffs: list
    q_coeffs: list
    exact: bool = True

    @property
    def p_degree(self) -> int:
        return _degree(self.p_coeffs)

    @property
    def q_degree(self) -> int:
        return _degree(self.q_coeffs)

    def as_json_dict(self) -> dict[str, Any]:
        convert = int if self.exact else float
        return {
            "n": self.n,
            "p_coeffs": [convert(c) for c in self.p_coeffs],
            "q_coeffs": [convert(c) for c in self.q_coeffs],
            "exact": self.exact,
        }


def _degree(coeffs: list) -> int:
    for i in range(len(coeffs) - 1, -1, -1):
        if coeffs[i] != 0:
            return i
    return -1
