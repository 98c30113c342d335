import math
import unittest

import mpmath

from ..exceptions import ParameterError
from .factorial_series import sqrt_factorial_series


def _brute_force(x: float, terms: int = 50) -> float:
    return math.fsum(x**k / math.sqrt(math.factorial(k)) for k in range(terms))


class SqrtFactorialSeriesTest(unittest.TestCase):
    def test_zero(self):
        self.assertEqual(sqrt_factorial_series(0.0), 1.0)

    def test_positive(self):
        value = sqrt_factorial_series(1.0)
        self.assertAlmostEqual(value, _brute_force(1.0), delta=1e-14)
        self.assertAlmostEqual(
            sqrt_factorial_series(0.5), _brute_force(0.5), delta=1e-14
        )

    def test_negative(self):
        self.assertAlmostEqual(
            sqrt_factorial_series(-1.0), _brute_force(-1.0), delta=1e-14
        )
        value = sqrt_factorial_series(-10.0)
        self.assertGreater(value, 0)
        with mpmath.workdps(80):
            reference = mpmath.fsum(
                mpmath.mpf(-10) ** k / mpmath.sqrt(mpmath.factorial(k))
                for k in range(400)
            )
        self.assertAlmostEqual(value, float(reference), delta=1e-12 * abs(value))

    def test_errors(self):
        with self.assertRaises(ParameterError):
            sqrt_factorial_series(1.0, tol=0)
        with self.assertRaises(ParameterError):
            sqrt_factorial_series(math.nan)


if __name__ == "__main__":
    unittest.main()
