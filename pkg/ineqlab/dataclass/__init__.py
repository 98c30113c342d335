from .base import LabDataClass
from .certificate import Certificate, SamplingStrategy, SharpnessRow
from .classic import (
    InductionCheck,
    InequalityCheck,
    YoungCase,
    YoungPreference,
    YoungVerdict,
)
from .complex import (
    ComplexPoint,
    LogRegionScan,
    RayCrossing,
    RegionStatus,
    RegionVerdict,
    ScanGrid,
)
from .contfrac import Convergent
from .family import BoundChain, BoundFamily, FamilyKey, Interval, SharpnessKnob
from .mean import MeanBranch, MeanKind, MeanSpec, MeanValueReport
from .run import OutputFormat, RunConfig
from .series import (
    BoundSide,
    ConstantEnclosure,
    PnConstantDecomposition,
    SeriesModel,
    SLBound,
    SLFixture,
    SLSweep,
    SLVerdict,
)
from .solve import SolveTrace
from .zeta import BernoulliTable

__all__ = [
    "BernoulliTable",
    "BoundChain",
    "BoundFamily",
    "BoundSide",
    "Certificate",
    "ComplexPoint",
    "ConstantEnclosure",
    "Convergent",
    "FamilyKey",
    "InductionCheck",
    "InequalityCheck",
    "Interval",
    "LabDataClass",
    "LogRegionScan",
    "MeanBranch",
    "MeanKind",
    "MeanSpec",
    "MeanValueReport",
    "OutputFormat",
    "PnConstantDecomposition",
    "RayCrossing",
    "RegionStatus",
    "RegionVerdict",
    "RunConfig",
    "SamplingStrategy",
    "ScanGrid",
    "SeriesModel",
    "SharpnessKnob",
    "SharpnessRow",
    "SLBound",
    "SLFixture",
    "SLSweep",
    "SLVerdict",
    "SolveTrace",
    "YoungCase",
    "YoungPreference",
    "YoungVerdict",
]
