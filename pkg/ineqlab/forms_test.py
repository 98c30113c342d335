import math
import unittest

import numpy as np

from .forms import build_form, form_names, register_form


class FormsTest(unittest.TestCase):
    def test_build_form(self):
        self.assertIs(build_form("log1p"), np.log1p)
        fn = build_form({"form": "compound_power", "shift": 0.5, "label": "ignored"})
        self.assertAlmostEqual(float(fn(np.float64(1.0))), 2.0**1.5)
        with self.assertRaises(ValueError):
            build_form("not-a-form")
        with self.assertRaises(TypeError):
            build_form({"shift": 1})
        with self.assertRaises(TypeError):
            build_form({"form": "pade", "width": 1})
        with self.assertRaises(TypeError):
            build_form(3)

    def test_register_twice(self):
        self.assertIn("identity", form_names())
        with self.assertRaises(ValueError):
            register_form("identity")(lambda: None)

    def test_polynomials(self):
        x = np.array([0.5, 2.0])
        np.testing.assert_allclose(
            build_form({"form": "polynomial", "coeffs": [1, 2, 3]})(x),
            1 + 2 * x + 3 * x**2,
        )
        np.testing.assert_allclose(
            build_form({"form": "inverse_polynomial", "coeffs": [0, 0.5]})(x),
            0.5 / x,
        )
        np.testing.assert_allclose(
            build_form({"form": "log1p_taylor", "order": 3})(x),
            x - x**2 / 2 + x**3 / 3,
        )
        np.testing.assert_allclose(
            build_form({"form": "inverse_product", "shifts": [0, 1, 0.5]})(x),
            1 / (x * (x + 1) * (x + 0.5)),
        )

    def test_log_forms(self):
        x = np.array([1.0])
        self.assertAlmostEqual(build_form("x_over_sqrt_shift")(x)[0], 1 / math.sqrt(2))
        self.assertAlmostEqual(build_form("rational_upper")(x)[0], 0.75)
        self.assertAlmostEqual(build_form("recip_log1p")(x)[0], math.log(2))
        self.assertAlmostEqual(
            build_form({"form": "recip_arith", "a": 0, "b": 1})(x)[0], 0.75
        )
        self.assertAlmostEqual(
            build_form({"form": "log_power_bound", "n": 2})(x)[0], 0.5
        )
        self.assertAlmostEqual(build_form("compound_defect")(x)[0], 1 - math.log(2))

    def test_refined_compound_forms(self):
        x = np.array([1.0, 2.0])
        series = build_form({"form": "log_square_series", "terms": 3})(x)
        self.assertAlmostEqual(series[0], 0.5 + 1 / 12)
        self.assertAlmostEqual(series[1], 1 / 6 - (1 / 12) / 16 + (1 / 6) / 32)
        rational = build_form(
            {
                "form": "compound_rational",
                "numerator": [2, 1],
                "denominator": [4, -18, 12],
            }
        )
        np.testing.assert_allclose(rational(x), [2.0**3, 1.5**2.25])

    def test_two_variable_forms(self):
        x, y = np.array([4.0]), np.array([2.0])
        self.assertAlmostEqual(build_form("log_ratio")(x, y)[0], math.log(2))
        self.assertAlmostEqual(
            build_form({"form": "relative_difference", "base": "x"})(x, y)[0], 0.5
        )
        self.assertAlmostEqual(
            build_form({"form": "relative_difference", "base": "y"})(x, y)[0], 1.0
        )
        with self.assertRaises(ValueError):
            build_form({"form": "relative_difference", "base": "z"})
        np.testing.assert_allclose(
            build_form({"form": "constant", "value": 3})(x, y), [3.0]
        )

    def test_complex_forms(self):
        re, im = np.array([2.0, -1.0]), np.array([0.0, 0.001])
        np.testing.assert_allclose(
            build_form("complex_log1p_modulus")(re, im),
            [math.log(3.0), abs(complex(math.log(0.001), math.pi / 2))],
        )
        np.testing.assert_allclose(
            build_form("complex_modulus")(re, im), [2.0, math.hypot(1.0, 0.001)]
        )

    def test_series_antiderivatives(self):
        x = np.array([4.0])
        self.assertAlmostEqual(
            build_form({"form": "power_antiderivative", "power": 0.5})(x)[0], 2.0
        )
        self.assertAlmostEqual(
            build_form({"form": "power_antiderivative", "power": 1})(x)[0],
            math.log(4.0),
        )
        self.assertAlmostEqual(build_form("asinh_sqrt")(np.array([1.0]))[0], 0.0)
        self.assertAlmostEqual(
            build_form({"form": "arccosh", "origin": 2})(np.array([2.0]))[0], 0.0
        )


if __name__ == "__main__":
    unittest.main()
