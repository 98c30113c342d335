import math
import unittest

import numpy as np

from ..dataclass import MeanBranch, MeanSpec
from ..exceptions import DomainError, GeneratorError, LengthMismatch, ParameterError
from .evaluate import (
    conjugate_values,
    mean_conjugate,
    mean_eval,
    mean_profile_h,
    mean_values,
    quasi_arithmetic_eval,
)
from .kernels import rado_generic

SYMMETRIC_SPECS = [
    "power:2",
    "power:0",
    "power:-1",
    "power:inf",
    "power:-inf",
    "rado:-3",
    "rado:-1",
    "rado:0",
    "rado:0.5",
    "rado:2",
    "gini:2:-1",
    "gini:-1:0.5",
    "lehmer:-0.5",
    "heron",
    "quasi-arith:log:0.5:0.5",
    "quasi-arith:reciprocal:0.5:0.5",
    "iterated(power:1,power:0)",
]
ASYMMETRIC_SPECS = [
    "weighted-arith:0.25:0.75",
    "weighted-geom:0.7:0.3",
    "quasi-arith:power:3:0.2:0.8",
]


def _random_pairs(n: int = 10**4, seed: int = 0):
    rng = np.random.default_rng(seed)
    return np.exp(rng.uniform(-7, 7, size=(2, n)))


class MeanEvalTest(unittest.TestCase):
    def test_examples(self):
        for spec, x, y, expected in [
            ("power:1", 2, 4, 3),
            ("power:0", 2, 8, 4),
            ("rado:1", 2, 4, 3),
            ("rado:-2", 4, 9, 6),
            ("rado:-1", 1, math.e, math.e - 1),
            ("heron", 1, 4, 7 / 3),
            ("lehmer:0", 3, 5, 4),
            ("gini:0:0", 4, 9, 6),
            ("power:inf", 2, 3, 3),
            ("rado:-inf", 2, 3, 2),
        ]:
            value = mean_eval(MeanSpec.from_string(spec), x, y).value
            self.assertAlmostEqual(value, expected, delta=1e-12 * expected, msg=spec)

    def test_identric(self):
        value = mean_eval(MeanSpec.rado(0), 1.0, 2.0).value
        self.assertAlmostEqual(value, 4 / math.e, delta=1e-14)
        self.assertAlmostEqual(
            mean_eval(MeanSpec.rado(0), 0.0, 2.0).value, 2 / math.e, delta=1e-14
        )

    def test_limit_branches(self):
        report = mean_eval(MeanSpec.power(0), 2, 8)
        self.assertEqual(report.branch, MeanBranch.LIMIT_CASE)
        self.assertEqual(mean_eval(MeanSpec.power(1), 2, 8).branch, MeanBranch.GENERIC)
        report = mean_eval(MeanSpec.rado(0.5), 1.0, 1.0 + 1e-9)
        self.assertEqual(report.branch, MeanBranch.LIMIT_CASE)
        self.assertAlmostEqual(report.value, 1.0 + 5e-10, delta=1e-15)
        near = mean_eval(MeanSpec.rado(1e-9), 1.0, 5.0)
        identric = mean_eval(MeanSpec.rado(0), 1.0, 5.0)
        self.assertEqual(near.branch, MeanBranch.LIMIT_CASE)
        self.assertAlmostEqual(near.value, identric.value, delta=1e-8)
        gini = mean_eval(MeanSpec.gini(2, 2 + 1e-9), 1.0, 3.0)
        self.assertAlmostEqual(
            gini.value, math.exp((math.log(3) * 9) / 10), delta=1e-8
        )

    def test_continuity_at_removable_points(self):
        x, y = 3.0, 7.0
        for spec, neighbour in [
            (MeanSpec.power(0), MeanSpec.power(1e-6)),
            (MeanSpec.rado(-1), MeanSpec.rado(-1 + 1e-6)),
            (MeanSpec.rado(0), MeanSpec.rado(1e-6)),
            (MeanSpec.gini(1, 1), MeanSpec.gini(1, 1 + 1e-6)),
        ]:
            a = mean_eval(spec, x, y).value
            b = mean_eval(neighbour, x, y).value
            self.assertAlmostEqual(a, b, delta=1e-5, msg=spec.as_string())

    def test_zero_arguments(self):
        self.assertAlmostEqual(
            mean_eval(MeanSpec.power(2), 0, 4).value, 4 / math.sqrt(2), delta=1e-14
        )
        self.assertEqual(mean_eval(MeanSpec.power(0), 0, 4).value, 0.0)
        self.assertAlmostEqual(mean_eval(MeanSpec.gini(1, 0), 0, 4).value, 2.0)
        self.assertEqual(mean_eval(MeanSpec.power(3), 0, 0).value, 0.0)
        for spec in ["power:-1", "rado:-1", "rado:-3", "gini:-1:1"]:
            with self.assertRaises(DomainError, msg=spec):
                mean_eval(MeanSpec.from_string(spec), 0, 4)
        with self.assertRaises(DomainError):
            mean_eval(MeanSpec.power(1), -1, 4)

    def test_rado_generic_rejects_closed_forms(self):
        for beta in [0, -1]:
            with self.assertRaises(ParameterError):
                rado_generic(beta, 1.0, 2.0)
        self.assertAlmostEqual(float(rado_generic(1, 2.0, 4.0)), 3.0)

    def test_axioms(self):
        x, y = _random_pairs()
        for s in SYMMETRIC_SPECS + ASYMMETRIC_SPECS:
            spec = MeanSpec.from_string(s)
            m = mean_values(spec, x, y)
            np.testing.assert_allclose(
                mean_values(spec, x, x), x, rtol=1e-12, err_msg=s
            )
            for scale in [1e-3, 1.0, 1e3]:
                np.testing.assert_allclose(
                    mean_values(spec, scale * x, scale * y),
                    scale * m,
                    rtol=1e-10,
                    err_msg=s,
                )
            lo, hi = np.minimum(x, y), np.maximum(x, y)
            self.assertTrue(np.all(m >= lo * (1 - 1e-12)), msg=s)
            self.assertTrue(np.all(m <= hi * (1 + 1e-12)), msg=s)
            bigger = mean_values(spec, x * 1.001, y)
            self.assertTrue(np.all(bigger >= m * (1 - 1e-14)), msg=s)
            if spec.symmetric:
                np.testing.assert_allclose(
                    mean_values(spec, y, x), m, rtol=1e-13, err_msg=s
                )

    def test_coincidences(self):
        x, y = _random_pairs(1000, seed=1)
        for power, rado in [(0.5, -0.5), (1, 1), (0, -2), (math.inf, math.inf)]:
            np.testing.assert_allclose(
                mean_values(MeanSpec.power(power), x, y),
                mean_values(MeanSpec.rado(rado), x, y),
                rtol=1e-12,
            )
        np.testing.assert_array_equal(
            mean_values(MeanSpec.power(-math.inf), x, y),
            mean_values(MeanSpec.rado(-math.inf), x, y),
        )

    def test_heron_representation(self):
        x, y = _random_pairs(1000, seed=2)
        g = mean_values(MeanSpec.power(0), x, y)
        a = mean_values(MeanSpec.power(1), x, y)
        np.testing.assert_allclose(
            mean_values(MeanSpec.heron(), x, y),
            mean_values(MeanSpec.weighted_arith(1 / 3, 2 / 3), g, a),
            rtol=1e-13,
        )


class ConjugateTest(unittest.TestCase):
    def test_examples(self):
        self.assertAlmostEqual(mean_conjugate(MeanSpec.power(2), 5, 5), 5.0)
        self.assertAlmostEqual(mean_conjugate(MeanSpec.power(0), 4, 9), 6.0)
        self.assertAlmostEqual(
            mean_conjugate(MeanSpec.power(1), 2, 4),
            mean_eval(MeanSpec.power(-1), 2, 4).value,
            delta=1e-12,
        )
        with self.assertRaises(DomainError):
            mean_conjugate(MeanSpec.power(1), 0, 4)

    def test_identities(self):
        x, y = _random_pairs(1000, seed=3)
        for alpha in [-2, 0.5, 3]:
            np.testing.assert_allclose(
                conjugate_values(MeanSpec.power(alpha), x, y),
                mean_values(MeanSpec.power(-alpha), x, y),
                rtol=1e-12,
            )
        for s in SYMMETRIC_SPECS:
            spec = MeanSpec.from_string(s)
            star = conjugate_values(spec, x, y)
            np.testing.assert_allclose(
                x * y / star, mean_values(spec, x, y), rtol=1e-12, err_msg=s
            )
        for beta in [-3, -1, 0, 2]:
            spec = MeanSpec.rado(beta)
            np.testing.assert_allclose(
                conjugate_values(spec, x, y),
                1 / mean_values(spec, 1 / x, 1 / y),
                rtol=1e-12,
            )
        a, b = 0.3, 0.7
        np.testing.assert_allclose(
            conjugate_values(MeanSpec.weighted_arith(a, b), x, y),
            1 / mean_values(MeanSpec.weighted_arith(a, b), 1 / y, 1 / x),
            rtol=1e-12,
        )
        np.testing.assert_allclose(
            conjugate_values(MeanSpec.weighted_geom(a, b), x, y),
            mean_values(MeanSpec.weighted_geom(b, a), x, y),
            rtol=1e-12,
        )


class QuasiArithmeticTest(unittest.TestCase):
    def test_examples(self):
        self.assertAlmostEqual(quasi_arithmetic_eval("identity", [0.5, 0.5], [2, 4]), 3)
        self.assertAlmostEqual(
            quasi_arithmetic_eval("log", [0.5, 0.5], [2, 8]), 4, delta=1e-14
        )
        self.assertEqual(quasi_arithmetic_eval("sin", [1.0], [7.0]), 7.0)
        self.assertAlmostEqual(
            quasi_arithmetic_eval("power:3", [0.5, 0.5], [1, 2]),
            mean_eval(MeanSpec.power(3), 1, 2).value,
            delta=1e-14,
        )

    def test_no_closed_inverse(self):
        xs, weights = [1.5, 2.0, 4.0], [0.2, 0.3, 0.5]
        value = quasi_arithmetic_eval("xlogx", weights, xs)
        self.assertTrue(1.5 <= value <= 4.0)
        target = sum(w * x * math.log(x) for w, x in zip(weights, xs))
        self.assertAlmostEqual(value * math.log(value), target, delta=1e-12)

    def test_decreasing_generator(self):
        value = quasi_arithmetic_eval("sin", [0.5, 0.5], [2.0, 3.0])
        self.assertAlmostEqual(
            value, math.pi - math.asin((math.sin(2) + math.sin(3)) / 2), delta=1e-12
        )

    def test_locally_monotone_pairs(self):
        # sin turns at pi/2 between the pairs but not within either
        spec = MeanSpec.from_string("quasi-arith:sin:0.5:0.5")
        x, y = np.array([0.1, 2.0]), np.array([0.2, 2.5])
        expected = [
            quasi_arithmetic_eval("sin", [0.5, 0.5], [0.1, 0.2]),
            quasi_arithmetic_eval("sin", [0.5, 0.5], [2.0, 2.5]),
        ]
        np.testing.assert_allclose(mean_values(spec, x, y), expected, rtol=1e-12)
        with self.assertRaises(GeneratorError):
            mean_values(spec, np.array([0.1, 1.0]), np.array([0.2, 3.0]))

    def test_vectorized_generator_checks(self):
        spec = MeanSpec.from_string("quasi-arith:arctan:0.5:0.5")
        x, y = np.array([-5.0, 0.5]), np.array([-4.0, 30.0])
        value = mean_values(spec, x, y)
        np.testing.assert_allclose(
            np.arctan(value), 0.5 * (np.arctan(x) + np.arctan(y)), rtol=1e-12
        )
        spec = MeanSpec.from_string("quasi-arith:log:0.5:0.5")
        with self.assertRaises(GeneratorError):
            mean_values(spec, np.array([1.0, 0.0]), np.array([2.0, 3.0]))
        np.testing.assert_allclose(
            mean_values(spec, np.array([0.0, 2.0]), np.array([0.0, 8.0])), [0.0, 4.0]
        )

    def test_errors(self):
        with self.assertRaises(GeneratorError):
            quasi_arithmetic_eval("sin", [0.5, 0.5], [1.0, 3.0])
        with self.assertRaises(GeneratorError):
            quasi_arithmetic_eval("not-a-generator", [0.5, 0.5], [1.0, 3.0])
        with self.assertRaises(GeneratorError):
            quasi_arithmetic_eval("log", [0.5, 0.5], [0.0, 3.0])
        with self.assertRaises(LengthMismatch):
            quasi_arithmetic_eval("log", [0.5, 0.5], [1.0])
        with self.assertRaises(ParameterError):
            quasi_arithmetic_eval("log", [0.5, 0.6], [1.0, 2.0])


class ProfileTest(unittest.TestCase):
    def test_profile(self):
        for t in [-3.0, 0.0, 5.0]:
            self.assertAlmostEqual(mean_profile_h(MeanSpec.power(1), t), 0.5)
        for spec in ["heron", "rado:0", "gini:1:1", "power:-inf"]:
            self.assertAlmostEqual(mean_profile_h(MeanSpec.from_string(spec), 0.0), 0.5)
        spec = MeanSpec.power(0)
        self.assertAlmostEqual(
            mean_profile_h(spec, 2.0), mean_profile_h(spec, -2.0), delta=1e-15
        )


if __name__ == "__main__":
    unittest.main()
