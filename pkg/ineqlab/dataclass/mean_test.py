import math
import unittest

from .mean import MeanBranch, MeanKind, MeanSpec, MeanValueReport


class TestMeanSpec(unittest.TestCase):
    def test_string_forms(self):
        self.assertEqual(MeanSpec.power(0.5).as_string(), "power:0.5")
        self.assertEqual(MeanSpec.gini(1, 2).as_string(), "gini:1:2")
        self.assertEqual(MeanSpec.power(-math.inf).as_string(), "power:-inf")
        iterated = MeanSpec.iterated(MeanSpec.power(1), MeanSpec.power(0))
        self.assertEqual(iterated.as_string(), "iterated(power:1,power:0)")
        for s in [
            "power:0.5",
            "rado:-2",
            "heron",
            "weighted-arith:0.25:0.75",
            "quasi-arith:log:0.5:0.5",
            "quasi-arith:power:3:0.5:0.5",
            "iterated(power:1,iterated(power:0,power:-1))",
        ]:
            self.assertEqual(MeanSpec.from_string(s).as_string(), s)
        spec = MeanSpec.from_string("quasi-arith:power:3:0.5:0.5")
        self.assertEqual(spec.generator, "power:3")
        self.assertEqual(spec.weights, [0.5, 0.5])

    def test_validation(self):
        with self.assertRaises(ValueError):
            MeanSpec(kind=MeanKind.POWER, params=[])
        with self.assertRaises(ValueError):
            MeanSpec.weighted_arith(0.5, 0.6)
        with self.assertRaises(ValueError):
            MeanSpec.weighted_geom(-0.5, 1.5)
        with self.assertRaises(ValueError):
            MeanSpec.gini(math.inf, 0)
        with self.assertRaises(ValueError):
            MeanSpec(kind=MeanKind.QUASI_ARITH)
        self.assertEqual(MeanSpec.quasi_arith("log").weights, [0.5, 0.5])

    def test_symmetry_and_hash(self):
        self.assertTrue(MeanSpec.heron().symmetric)
        self.assertFalse(MeanSpec.weighted_arith(0.25, 0.75).symmetric)
        self.assertEqual(MeanSpec.power(1), MeanSpec.from_string("power:1"))
        self.assertEqual(len({MeanSpec.power(1), MeanSpec.power(1.0)}), 1)

    def test_json(self):
        spec = MeanSpec.rado(-1)
        self.assertEqual(MeanSpec.from_json(spec.as_json()), spec)
        report = MeanValueReport.from_json_dict({"value": 2.0, "branch": "limit-case"})
        self.assertEqual(report.branch, MeanBranch.LIMIT_CASE)


if __name__ == "__main__":
    unittest.main()
