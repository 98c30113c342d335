import math
import unittest

import numpy as np

from ..dataclass import ComplexPoint, ScanGrid
from ..exceptions import DomainError
from ..logbounds import eps_eval
from .epsplane import eps_complex, eps_complex_sup, eps_complex_values


class EpsComplexTest(unittest.TestCase):
    def test_examples(self):
        value, modulus = eps_complex(1e6)
        self.assertAlmostEqual(value.re, 0.5, delta=1e-6)
        self.assertEqual(value.im, 0.0)
        value, modulus = eps_complex(ComplexPoint(re=1, im=0))
        self.assertAlmostEqual(value.re, 1 / math.log(2) - 1, delta=1e-15)
        self.assertAlmostEqual(modulus, 0.442695, delta=1e-6)

    def test_positive_axis_matches_real(self):
        x = np.logspace(-6, 8, 701)
        values = eps_complex_values(x)
        self.assertTrue(np.all(np.abs(values) < 0.5))
        for xi, vi in zip(x, values):
            self.assertAlmostEqual(vi.real, eps_eval("e_exponent", xi), delta=1e-12)
            self.assertEqual(vi.imag, 0.0)

    def test_series_branch_continuity(self):
        z = np.array([999.9999999 + 0.01j, 1000.0000001 + 0.01j])
        values = eps_complex_values(z)
        self.assertAlmostEqual(values[0], values[1], delta=1e-9)

    def test_conjugate_symmetry(self):
        z = np.array([0.3 + 0.7j, -2 + 0.5j, -0.5 + 0.01j, 5 - 3j])
        mirrored = eps_complex_values(z.conjugate())
        self.assertTrue(np.allclose(mirrored, eps_complex_values(z).conj()))

    def test_cut(self):
        for z in (0, -1, -0.5, complex(-0.25, 0)):
            with self.assertRaises(DomainError):
                eps_complex(z)
        self.assertTrue(np.isnan(eps_complex_values(np.array([-0.5]))[0]))
        eps_complex(-2)

    def test_sup(self):
        grid = ScanGrid(re_min=0.1, re_max=10, im_min=0, im_max=0, nx=100, ny=1)
        sup, where = eps_complex_sup(grid)
        self.assertLess(sup, 0.5)
        self.assertAlmostEqual(where.re, 10.0, delta=1e-12)

        grid = ScanGrid(re_min=-2, re_max=2, im_min=-2, im_max=2, nx=41, ny=41)
        sup, where = eps_complex_sup(grid)
        self.assertTrue(math.isfinite(sup))
        self.assertGreater(sup, 0.0)
        self.assertFalse(where.im == 0 and -1 <= where.re <= 0)

    def test_sup_on_cut(self):
        grid = ScanGrid(re_min=-1, re_max=0, im_min=0, im_max=0, nx=5, ny=1)
        with self.assertRaises(DomainError):
            eps_complex_sup(grid)


if __name__ == "__main__":
    unittest.main()
