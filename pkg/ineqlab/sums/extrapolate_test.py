import unittest

import numpy as np

from ..exceptions import ExtrapolationUnstable, LengthMismatch
from .extrapolate import richardson_estimates, richardson_limit, stable_limit


class RichardsonTest(unittest.TestCase):
    def test_polynomial_is_exact(self):
        h = np.array([1.0, 0.5, 0.25])
        values = 3 + 2 * h - h**2
        self.assertAlmostEqual(richardson_limit(h, values), 3.0, delta=1e-12)
        estimates = richardson_estimates(h, values)
        self.assertEqual(len(estimates), 3)
        self.assertEqual(estimates[0], values[0])

    def test_stable_limit(self):
        h = [1e-3, 1e-4, 1e-5]
        values = [0.5 - x / 12 for x in h]
        self.assertAlmostEqual(stable_limit(h, values), 0.5, delta=1e-14)
        with self.assertRaises(ExtrapolationUnstable):
            stable_limit([1e-1, 1e-2, 1e-3], [1.0, 10.0, 100.0])

    def test_errors(self):
        with self.assertRaises(LengthMismatch):
            richardson_limit([1.0, 0.5], [1.0])
        with self.assertRaises(LengthMismatch):
            richardson_limit([], [])
        with self.assertRaises(ValueError):
            richardson_limit([1.0, 1.0], [2.0, 3.0])


if __name__ == "__main__":
    unittest.main()
