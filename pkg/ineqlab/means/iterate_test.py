import math
import unittest
import warnings

import numpy as np
from scipy.special import ellipk

from ..dataclass import MeanSpec
from ..exceptions import DomainError, NoConvergence
from .iterate import agm_closed_form, elliptic_K, iterate_mean

A = MeanSpec.power(1)
G = MeanSpec.power(0)
H = MeanSpec.power(-1)


class IterateMeanTest(unittest.TestCase):
    def test_fixed_point(self):
        self.assertEqual(iterate_mean(A, G, 1.0, 1.0), (1.0, 0))

    def test_agm(self):
        mu, iterations = iterate_mean(A, G, 1.0, 0.5)
        self.assertLess(iterations, 10)
        self.assertAlmostEqual(mu, agm_closed_form(1.0, 0.5), delta=1e-12)
        self.assertTrue(0.5 <= mu <= 1.0)

    def test_arithmetic_harmonic(self):
        mu, _ = iterate_mean(A, H, 2.0, 8.0)
        self.assertAlmostEqual(mu, 4.0, delta=1e-12)

    def test_random_agm_pairs(self):
        rng = np.random.default_rng(0)
        for x0, r in zip(rng.uniform(0.1, 10.0, 100), rng.uniform(0.05, 1.0, 100)):
            y0 = x0 * r
            mu, _ = iterate_mean(A, G, x0, y0)
            expected = 0.5 * math.pi * x0 / elliptic_K(math.sqrt(1 - r * r))
            self.assertAlmostEqual(mu / expected, 1.0, delta=1e-11)

    def test_non_contracting(self):
        first = MeanSpec.weighted_arith(1, 0)
        second = MeanSpec.weighted_arith(0, 1)
        with self.assertRaises(NoConvergence):
            iterate_mean(first, second, 1.0, 2.0)
        with self.assertRaises(NoConvergence):
            iterate_mean(A, G, 1.0, 1e-3, maxit=1)
        with self.assertRaises(DomainError):
            iterate_mean(A, G, 0.0, 1.0)


class EllipticTest(unittest.TestCase):
    def test_values(self):
        self.assertAlmostEqual(elliptic_K(0.0), math.pi / 2, delta=1e-15)
        for k in [0.1, 0.5, 0.9, 0.99]:
            self.assertAlmostEqual(elliptic_K(k), float(ellipk(k * k)), delta=1e-13)
        large = elliptic_K(0.999999)
        self.assertTrue(math.isfinite(large))
        self.assertGreater(large, 7.0)

    def test_near_one(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            k = 1.0 - 1e-12
            value = elliptic_K(k)
        self.assertEqual(caught, [])
        complement = math.sqrt((1.0 - k) * (1.0 + k))
        self.assertAlmostEqual(value, math.log(4.0 / complement), delta=1e-9)

    def test_domain(self):
        for k in [1.0, 1.5, -0.1, math.nan]:
            with self.assertRaises(DomainError):
                elliptic_K(k)

    def test_closed_form(self):
        self.assertEqual(agm_closed_form(3.0, 3.0), 3.0)
        self.assertAlmostEqual(agm_closed_form(1.0, 0.5), agm_closed_form(0.5, 1.0))
        with self.assertRaises(DomainError):
            agm_closed_form(1.0, 0.0)


if __name__ == "__main__":
    unittest.main()
