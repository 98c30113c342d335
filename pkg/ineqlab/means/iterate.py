import logging
import math

from scipy.special import ellipkm1

from ..dataclass import MeanSpec
from ..exceptions import DomainError
from .evaluate import ITERATE_MAX_ITERATIONS, ITERATE_TOLERANCE, iterate_values

_LOGGER = logging.getLogger(__name__)


def iterate_mean(
    m: MeanSpec,
    n: MeanSpec,
    x0: float,
    y0: float,
    tol: float = ITERATE_TOLERANCE,
    maxit: int = ITERATE_MAX_ITERATIONS,
) -> tuple[float, int]:
    """Common limit of x <- M(x, y), y <- N(x, y).

    Stops once |x - y| <= tol * max(x, y) and returns the midpoint with
    the number of steps taken.
    """
    if not tol > 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
    mu, iterations = iterate_values(m, n, x0, y0, tol=tol, maxit=maxit)
    _LOGGER.debug(
        f"iterate {m.as_string()} {n.as_string()} mu={float(mu)} "
        f"iterations={iterations}"
    )
    return float(mu), iterations


def elliptic_K(k: float) -> float:
    """Complete elliptic integral of the first kind with modulus k.

    Evaluated through the complementary parameter 1 - k^2 so that moduli
    within a few ulps of 1 keep their logarithmic growth.
    """
    if not 0 <= k < 1:
        raise DomainError(f"Elliptic modulus must lie in [0, 1), got {k}")
    complement = (1.0 - k) * (1.0 + k)
    return float(ellipkm1(complement))


def agm_closed_form(x0: float, y0: float) -> float:
    """Arithmetic-geometric mean as (pi/2) max / K(sqrt(1 - (min/max)^2))."""
    if not (x0 > 0 and y0 > 0):
        raise DomainError(f"AGM needs positive arguments, got {x0}, {y0}")
    hi, lo = max(x0, y0), min(x0, y0)
    if hi == lo:
        return hi
    r = lo / hi
    return 0.5 * math.pi * hi / elliptic_K(math.sqrt((1.0 - r) * (1.0 + r)))
