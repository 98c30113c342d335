import math
import unittest

import numpy as np

from ..exceptions import DomainError, OverflowGuard, ParameterError
from .contfrac import (
    EXACT_LIMIT,
    MAX_ORDER,
    cf_convergent,
    cf_eval,
    cf_values,
    check_cf_enclosure,
    check_cf_refinement,
)


class ConvergentTest(unittest.TestCase):
    def test_low_orders(self):
        first = cf_convergent(1)
        self.assertEqual((first.p_coeffs, first.q_coeffs), ([0, 1], [1]))
        second = cf_convergent(2)
        self.assertEqual((second.p_coeffs, second.q_coeffs), ([0, 2], [2, 1]))
        third = cf_convergent(3)
        self.assertEqual((third.p_coeffs, third.q_coeffs), ([0, 6, 1], [6, 4]))
        fourth = cf_convergent(4)
        self.assertEqual(fourth.p_coeffs, [0, 24, 12])
        self.assertEqual(fourth.q_coeffs, [24, 24, 4])

    def test_degrees(self):
        for n in range(1, EXACT_LIMIT + 1):
            convergent = cf_convergent(n)
            self.assertTrue(convergent.exact)
            self.assertEqual(convergent.p_degree, (n + 1) // 2, msg=n)
            self.assertEqual(convergent.q_degree, n // 2, msg=n)
            self.assertEqual(convergent.p_coeffs[0], 0)
            self.assertTrue(all(c > 0 for c in convergent.p_coeffs[1:]), msg=n)
            self.assertTrue(all(c > 0 for c in convergent.q_coeffs), msg=n)

    def test_extended(self):
        convergent = cf_convergent(EXACT_LIMIT + 1)
        self.assertFalse(convergent.exact)
        self.assertEqual(convergent.q_degree, (EXACT_LIMIT + 1) // 2)
        self.assertAlmostEqual(cf_eval(EXACT_LIMIT + 1, 1.0), math.log(2), delta=1e-15)
        self.assertEqual(convergent.as_json_dict()["exact"], False)

    def test_eval(self):
        for x in [0.0, 0.3, 5.0]:
            self.assertAlmostEqual(cf_eval(1, x), x)
            self.assertAlmostEqual(cf_eval(2, x), 2 * x / (x + 2), delta=1e-15)
            self.assertAlmostEqual(
                cf_eval(3, x), x * (x + 6) / (4 * x + 6), delta=1e-15
            )
        self.assertLess(abs(cf_eval(9, 1.0) - math.log(2)), 1e-6)
        self.assertAlmostEqual(cf_eval(20, -0.5), math.log(0.5), delta=1e-10)
        xs = np.array([0.1, 1.0, 10.0])
        np.testing.assert_allclose(
            cf_values(5, xs), [cf_eval(5, x) for x in xs], rtol=1e-14
        )

    def test_errors(self):
        with self.assertRaises(ParameterError):
            cf_convergent(-1)
        with self.assertRaises(OverflowGuard):
            cf_convergent(MAX_ORDER + 1)
        with self.assertRaises(DomainError):
            cf_eval(3, -1.0)


class EnclosureTest(unittest.TestCase):
    def test_interleaving(self):
        for k in range(3):
            cert = check_cf_enclosure(k, samples=10**4, seed=0)
            self.assertTrue(cert.holds, msg=k)
            self.assertEqual(cert.samples, 2 * 10**4)

    def test_refinement(self):
        for k in range(2):
            self.assertTrue(check_cf_refinement(k, samples=10**4, seed=0).holds)

    def test_negative_index(self):
        with self.assertRaises(ParameterError):
            check_cf_enclosure(-1)


if __name__ == "__main__":
    unittest.main()
