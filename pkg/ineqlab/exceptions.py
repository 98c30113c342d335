from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .dataclass import SolveTrace


class InequalityLabException(Exception):
    pass


class DomainError(InequalityLabException):
    pass


class ParameterError(InequalityLabException):
    pass


class GeneratorError(ParameterError):
    pass


class SeriesModelError(ParameterError):
    pass


class RangeError(InequalityLabException):
    pass


class LengthMismatch(InequalityLabException):
    pass


class OverflowGuard(InequalityLabException):
    pass


class ExtrapolationUnstable(InequalityLabException):
    pass


class SolverException(InequalityLabException):
    def __init__(self, message: str, trace: Optional["SolveTrace"] = None):
        self.trace = trace
        super().__init__(message)


class NoConvergence(SolverException):
    pass


class NoBracket(SolverException):
    pass


class DerivativeZero(SolverException):
    pass


class DerivativeSingular(SolverException):
    pass


class Divergence(SolverException):
    pass
