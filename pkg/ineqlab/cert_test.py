import math
import unittest
import warnings

import numpy as np

from .cert import (
    MAX_COUNTEREXAMPLES,
    certify,
    merge_certificates,
    sample_points,
    sharp_transition,
    sharpness_probe,
)
from .dataclass import (
    BoundFamily,
    Certificate,
    FamilyKey,
    Interval,
    SamplingStrategy,
    SharpnessRow,
)
from .exceptions import DomainError
from .registry import get_bound_family, get_sharpness_knobs, perturb_family


def _reversed(family: BoundFamily) -> BoundFamily:
    return BoundFamily(
        key=FamilyKey(tag=family.key.tag, variant="reversed"),
        statement=f"not ({family.statement})",
        lhs=family.rhs,
        rhs=family.lhs,
        domain=family.domain,
    )


class CertifyTest(unittest.TestCase):
    def test_log1p_le_x(self):
        family = get_bound_family("log1p-le-x")
        cert = certify(
            family,
            samples=10**4,
            seed=42,
            strategy=SamplingStrategy.LOG_UNIFORM,
            domain=[Interval.from_string("(0, 100]")],
        )
        self.assertTrue(cert.holds)
        self.assertEqual(cert.counterexamples, [])
        self.assertEqual(cert.samples, 10**4)
        self.assertLess(cert.worst_gap, 1e-10)
        self.assertGreaterEqual(cert.worst_gap, 0.0)
        self.assertLess(cert.worst_point[0], 1e-4)

    def test_overflowing_side_is_skipped(self):
        family = BoundFamily(
            key=FamilyKey(tag="x-le-exp"),
            statement="x <= exp(x)",
            lhs=lambda x: x,
            rhs=np.exp,
            domain=[Interval(lo=0.0, hi=math.inf, lo_closed=True)],
        )
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            cert = certify(family, samples=2000, seed=3)
        self.assertTrue(cert.holds)
        self.assertGreater(cert.skipped, 0)
        self.assertLess(cert.skipped, cert.samples)
        self.assertTrue(math.isfinite(cert.worst_gap))
        self.assertTrue(math.isfinite(cert.worst_slack))
        self.assertGreater(cert.worst_slack, 0.0)

    def test_negative_control(self):
        family = _reversed(get_bound_family("x-over-1px-le-log1p"))
        cert = certify(family, samples=1000, seed=1)
        self.assertFalse(cert.holds)
        self.assertGreater(cert.failures, 0)
        self.assertEqual(len(cert.counterexamples), MAX_COUNTEREXAMPLES)
        lhs, rhs = family.evaluate(cert.counterexamples[0])
        self.assertLess(rhs[0], lhs[0])

    def test_complex_grid(self):
        family = get_bound_family("complex-log1p-le-modulus")
        cert = certify(family, samples=400 * 400, strategy=SamplingStrategy.GRID)
        self.assertFalse(cert.holds)
        self.assertEqual(cert.samples, 160000)
        re, im = cert.worst_point
        self.assertLess(abs(complex(re, im) - complex(-1, 0.001)), 0.05)

    def test_deterministic(self):
        family = get_bound_family("pade-lower")
        first = certify(family, samples=5000, seed=7)
        second = certify(family, samples=5000, seed=7)
        self.assertEqual(first.as_json(), second.as_json())
        other = certify(family, samples=5000, seed=8)
        self.assertNotEqual(first.worst_point, other.worst_point)

    def test_prefix_refinement(self):
        family = _reversed(get_bound_family("log1p-le-x"))
        small = certify(family, samples=2000, seed=3)
        large = certify(family, samples=4000, seed=3)
        self.assertLessEqual(small.failures, large.failures)
        self.assertEqual(small.counterexamples, large.counterexamples)
        points = sample_points(family.domain, 4000, 3, SamplingStrategy.LOG_UNIFORM)
        prefix = sample_points(family.domain, 2000, 3, SamplingStrategy.LOG_UNIFORM)
        self.assertTrue((points[:2000] == prefix).all())

    def test_strict_equality_hits(self):
        cert = certify(get_bound_family("pade-lower"), samples=10**4, seed=0)
        self.assertTrue(cert.holds)
        self.assertGreater(cert.strict_violations, 0)
        cert = certify(get_bound_family("log1p-le-x"), samples=1000, seed=0)
        self.assertEqual(cert.strict_violations, 0)

    def test_two_dimensional(self):
        family = get_bound_family("lagrange-lower")
        cert = certify(family, samples=4000, seed=5)
        self.assertTrue(cert.holds)
        self.assertGreater(cert.skipped, 0)

    def test_sampling_strategies(self):
        domain = [Interval.from_string("(-inf, -1)")]
        points = sample_points(domain, 1000, 0, SamplingStrategy.LOG_UNIFORM)
        self.assertTrue((points < -1).all())
        domain = [Interval.from_string("[0.001, 1000]")]
        points = sample_points(domain, 1000, 0, SamplingStrategy.LOG_UNIFORM)
        self.assertTrue(((points >= 0.001) & (points <= 1000)).all())
        self.assertGreater((points < 1).mean(), 0.4)
        points = sample_points(domain * 2, 10, 0, SamplingStrategy.GRID)
        self.assertEqual(points.shape, (16, 2))

    def test_errors(self):
        family = get_bound_family("log1p-le-x")
        with self.assertRaises(ValueError):
            certify(family, samples=0)
        with self.assertRaises(DomainError):
            certify(family, domain=[Interval(lo=1, hi=1)])
        with self.assertRaises(DomainError):
            certify(family, domain=[Interval(lo=0, hi=1), Interval(lo=0, hi=1)])


class MergeTest(unittest.TestCase):
    def test_merge(self):
        good = certify(get_bound_family("log1p-le-x"), samples=100, seed=0)
        bad = certify(_reversed(get_bound_family("log1p-le-x")), samples=100, seed=0)
        merged = merge_certificates("both", [good, bad])
        self.assertIsInstance(merged, Certificate)
        self.assertFalse(merged.holds)
        self.assertEqual(merged.samples, 200)
        self.assertEqual(merged.worst_gap, bad.worst_gap)
        self.assertEqual(merged.failures, bad.failures)
        with self.assertRaises(ValueError):
            merge_certificates("none", [])


class SharpnessTest(unittest.TestCase):
    def _sweep(self, family_id: str, deltas: list[float]):
        knob = get_sharpness_knobs()[family_id]
        return sharpness_probe(
            get_bound_family(family_id),
            lambda delta: perturb_family(knob, delta),
            deltas,
            samples=10**4,
            seed=11,
        )

    def test_sqrt_shift(self):
        rows = self._sweep("log1p-le-x-over-sqrt", [0.99, 1.0, 1.01])
        self.assertEqual([r.holds for r in rows], [True, True, False])
        self.assertEqual(sharp_transition(rows), (1.0, 1.01))
        self.assertLess(rows[-1].worst_point[0], 0.5)

    def test_pade(self):
        rows = self._sweep("pade-lower", [2.0, 1.99])
        self.assertEqual(sharp_transition(rows), (2.0, 1.99))

    def test_rational(self):
        rows = self._sweep("log1p-le-rational", [2.0, 1.99])
        self.assertEqual([r.holds for r in rows], [True, False])

    def test_transition(self):
        rows = [SharpnessRow(delta=d, holds=True, worst_gap=0.0) for d in [1, 2]]
        self.assertIsNone(sharp_transition(rows))
        rows.append(SharpnessRow(delta=3, holds=False, worst_gap=-math.inf))
        self.assertEqual(sharp_transition(rows), (2, 3))


if __name__ == "__main__":
    unittest.main()
