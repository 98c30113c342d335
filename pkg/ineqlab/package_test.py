import unittest

from . import load_tests as package_load_tests


def _flatten(suite):
    for test in suite:
        if isinstance(test, unittest.TestSuite):
            yield from _flatten(test)
        else:
            yield test


class LoadTestsTest(unittest.TestCase):
    def test_discovers_package_modules(self):
        suite = package_load_tests(unittest.TestLoader(), unittest.TestSuite(), None)
        ids = [test.id() for test in _flatten(suite)]
        failed = [i for i in ids if i.startswith("unittest.loader")]
        self.assertEqual(failed, [])
        self.assertTrue(all(i.startswith("ineqlab.") for i in ids))
        self.assertTrue(any(i.startswith("ineqlab.cli.main_test.") for i in ids))
        self.assertTrue(any(i.startswith("ineqlab.helper_test.") for i in ids))


if __name__ == "__main__":
    unittest.main()
