import io
import json
import math
import pathlib
import tempfile
import unittest

import pandas as pd

from ..dataclass import Certificate, SamplingStrategy
from .main import EXIT_COUNTEREXAMPLE, EXIT_OK, EXIT_USAGE, exit_code, run


def _run(*argv: str) -> tuple[int, str, str]:
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


class MeansCommandTest(unittest.TestCase):
    def test_geometric_mean(self):
        code, out, _ = _run(
            "means", "eval", "--kind", "power", "--alpha", "0", "--x", "2", "--y", "8"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "4\n")

    def test_spec_string(self):
        code, out, _ = _run(
            "means", "eval", "--spec", "weighted-arith:0.5:0.5", "--x", "1", "--y", "3"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "2\n")

    def test_agm(self):
        code, out, _ = _run(
            "--output", "json", "means", "iterate", "--x0", "2", "--y0", "1"
        )
        self.assertEqual(code, EXIT_OK)
        result = json.loads(out)
        self.assertAlmostEqual(result["mu"], 1.4567910310469068, delta=1e-13)

    def test_large_order(self):
        code, out, _ = _run(
            "means", "eval", "--kind", "power", "--alpha", "1e308", "--x", "2",
            "--y", "8",
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(float(out), 8.0)

    def test_domain_error(self):
        code, out, err = _run("means", "conjugate", "--x", "-1", "--y", "2")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertIn("DomainError", err)


class CertifyCommandTest(unittest.TestCase):
    def test_certificate_json(self):
        code, out, _ = _run(
            "certify",
            "--family",
            "log1p-le-x",
            "--samples",
            "10000",
            "--seed",
            "42",
            "--output",
            "json",
        )
        self.assertEqual(code, EXIT_OK)
        cert = Certificate.from_json_dict(json.loads(out))
        self.assertTrue(cert.holds)
        self.assertEqual(cert.family_id, "log1p-le-x")
        self.assertEqual(cert.seed, 42)
        self.assertEqual(cert.samples, 10000)

    def test_alias_and_seed_position(self):
        _, a, _ = _run(
            "--seed", "7", "certify", "--family", "pade-lower", "--samples", "500"
        )
        _, b, _ = _run(
            "bounds", "certify", "--family", "pade-lower", "--samples", "500",
            "--seed", "7",
        )
        self.assertEqual(a, b)
        self.assertIn("holds", a)

    def test_unknown_family(self):
        code, _, err = _run("certify", "--family", "no-such-family")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("no-such-family", err)

    def test_exit_code(self):
        cert = Certificate(
            family_id="f",
            samples=1,
            seed=0,
            strategy=SamplingStrategy.UNIFORM,
            holds=False,
            worst_gap=-1.0,
            worst_point=[0.0],
            worst_slack=-1.0,
            failures=1,
        )
        self.assertEqual(exit_code(cert), EXIT_COUNTEREXAMPLE)
        self.assertEqual(exit_code([cert.copy(holds=True), cert]), EXIT_COUNTEREXAMPLE)
        self.assertEqual(exit_code(cert.copy(holds=True)), EXIT_OK)
        self.assertEqual(exit_code(1.5), EXIT_OK)


class OutputTest(unittest.TestCase):
    def test_complex_curve_csv(self):
        code, out, _ = _run("complex", "curve", "--points", "200", "--output", "csv")
        self.assertEqual(code, EXIT_OK)
        self.assertNotIn("\r", out)
        frame = pd.read_csv(io.StringIO(out))
        self.assertEqual(list(frame.columns), ["phi", "branch", "re", "im", "quartic"])
        self.assertEqual(len(frame), 400)
        self.assertTrue((frame["quartic"].abs() <= 1e-9).all())

    def test_out_file_matches_stdout(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = pathlib.Path(tmp) / "nested" / "bernoulli.csv"
            code, out, _ = _run(
                "zeta", "bernoulli", "--upto", "12", "--output", "csv",
                "--out", str(path),
            )
            self.assertEqual(code, EXIT_OK)
            self.assertEqual(path.read_bytes(), out.encode("utf-8"))
        frame = pd.read_csv(io.StringIO(out))
        row = frame[frame["k"] == 12].iloc[0]
        self.assertEqual(row["numerator"], -691)
        self.assertEqual(row["denominator"], 2730)

    def test_repeatable(self):
        argv = ["--output", "csv", "complex", "log-scan", "--nx", "20", "--ny", "11"]
        self.assertEqual(_run(*argv), _run(*argv))

    def test_text_table(self):
        code, out, _ = _run("bounds", "list")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("log1p-le-x", out)
        self.assertIn("ln(1+x) <= x", out)

    def test_text_record(self):
        code, out, _ = _run("--output", "text", "zeta", "direct", "--s", "2")
        self.assertEqual(code, EXIT_OK)
        lines = dict(line.split() for line in out.splitlines())
        self.assertAlmostEqual(float(lines["value"]), math.pi**2 / 6, delta=1e-7)


class OtherCommandsTest(unittest.TestCase):
    def test_bisect(self):
        code, out, _ = _run(
            "--output", "json", "solve", "bisect", "--problem", "sqrt2",
            "--lo", "1", "--hi", "2",
        )
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(json.loads(out)["root"], math.sqrt(2), delta=1e-12)

    def test_lambda_iteration(self):
        code, out, _ = _run(
            "--output", "json", "solve", "fixed-point", "--problem", "lambda-map",
            "--x0", "1", "--lam=-7.47", "--tol", "1e-6",
        )
        self.assertEqual(code, EXIT_OK)
        result = json.loads(out)
        self.assertTrue(result["converged"])
        self.assertLessEqual(result["iterations"], 10)
        self.assertAlmostEqual(result["root"], 0.413053, delta=1e-5)

    def test_plain_iteration_fails(self):
        code, _, err = _run(
            "solve", "fixed-point", "--problem", "lambda-map", "--x0", "1",
            "--maxit", "50",
        )
        self.assertEqual(code, EXIT_USAGE)
        self.assertTrue("Divergence" in err or "NoConvergence" in err)

    def test_young_critical(self):
        code, out, _ = _run("young", "critical", "--x", "0.5", "--p", "4")
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(float(out), 1.35485, delta=1e-4)

    def test_sums_limits(self):
        code, out, _ = _run(
            "--output", "json", "sums", "limits", "--order", "1",
            "--grid", "1000,10000,100000",
        )
        self.assertEqual(code, EXIT_OK)
        result = json.loads(out)
        self.assertAlmostEqual(result["limit"], 0.5, delta=1e-3)
        self.assertAlmostEqual(result["constant"], 0.5772156649015329, delta=1e-13)
        self.assertGreater(result["constant_width"], 0.0)

    def test_young_overflow(self):
        code, out, err = _run(
            "young", "compare", "--x", "1e200", "--y", "2", "--p", "4"
        )
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertIn("OverflowError", err)
        self.assertNotIn("Traceback", err)

    def test_complex_classify(self):
        code, out, _ = _run(
            "--output", "json", "complex", "classify", "--z=-6", "--region", "amgm"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["status"], "outside")

    def test_holder(self):
        code, out, _ = _run(
            "--output", "json", "classic", "holder", "--u", "1,2,3", "--v", "4,5,6",
            "--p", "3",
        )
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(out)["holds"])

    def test_usage_errors(self):
        self.assertEqual(_run()[0], EXIT_USAGE)
        self.assertEqual(_run("means")[0], EXIT_USAGE)
        self.assertEqual(_run("means", "eval")[0], EXIT_USAGE)
        self.assertEqual(_run("--output", "yaml", "bounds", "list")[0], EXIT_USAGE)
        self.assertEqual(_run("solve", "lambda", "--problem", "no", "--x", "1")[0], 2)


if __name__ == "__main__":
    unittest.main()
