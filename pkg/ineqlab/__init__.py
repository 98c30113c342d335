from .cert import certify, merge_certificates
from .dataclass import (
    BoundFamily,
    Certificate,
    ComplexPoint,
    FamilyKey,
    Interval,
    MeanSpec,
    SolveTrace,
)
from .exceptions import InequalityLabException
from .path import LIB_DIR, REPO_DIR

__all__ = [
    "BoundFamily",
    "Certificate",
    "ComplexPoint",
    "FamilyKey",
    "InequalityLabException",
    "Interval",
    "MeanSpec",
    "SolveTrace",
    "certify",
    "merge_certificates",
]


# NOTE: This changes the test discovery pattern from "test*.py" (default) to "*test.py".
def load_tests(loader, standard_tests, pattern):
    package_tests = loader.discover(
        start_dir=LIB_DIR, pattern="*test.py", top_level_dir=REPO_DIR
    )
    standard_tests.addTests(package_tests)
    return standard_tests
