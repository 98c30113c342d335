"""Named vectorized expressions referenced from the YAML registries.

A form spec is either a bare name or a mapping with a ``form`` key plus
keyword parameters, e.g. ``{form: compound_power, shift: 0.5}``.
"""

import math
from typing import Any, Callable

import numpy as np

from .helper import complex_log1p

Form = Callable[..., np.ndarray]

_FORMS: dict[str, Callable[..., Form]] = {}


def register_form(name: str):
    def decorator(factory: Callable[..., Form]) -> Callable[..., Form]:
        if name in _FORMS:
            raise ValueError(f"Form {name} registered twice")
        _FORMS[name] = factory
        return factory

    return decorator


def form_names() -> list[str]:
    return sorted(_FORMS)


def build_form(spec: str | dict[str, Any]) -> Form:
    if isinstance(spec, str):
        name, kwargs = spec, {}
    elif isinstance(spec, dict):
        kwargs = dict(spec)
        if "form" not in kwargs:
            raise TypeError(f"Form spec {spec} is missing 'form'")
        name = kwargs.pop("form")
        kwargs.pop("label", None)
    else:
        raise TypeError(f"Invalid form spec: {spec}")
    if name not in _FORMS:
        raise ValueError(f"Unknown form {name}")
    try:
        return _FORMS[name](**kwargs)
    except TypeError as e:
        raise TypeError(f"Error building form {name}: {e}") from e


# Elementary forms


@register_form("identity")
def _identity() -> Form:
    return lambda x: x


@register_form("constant")
def _constant(value: float) -> Form:
    value = float(value)
    return lambda *coords: np.full_like(coords[0], value)


@register_form("e")
def _e() -> Form:
    return _constant(math.e)


@register_form("log")
def _log(origin: float = 1.0) -> Form:
    offset = math.log(origin)
    return lambda x: np.log(x) - offset


@register_form("log1p")
def _log1p() -> Form:
    return np.log1p


@register_form("polynomial")
def _polynomial(coeffs: list[float]) -> Form:
    """sum_j coeffs[j] * x^j, coefficients from the constant term upward."""
    reversed_coeffs = list(reversed([float(c) for c in coeffs]))
    return lambda x: np.polyval(reversed_coeffs, x)


@register_form("inverse_polynomial")
def _inverse_polynomial(coeffs: list[float]) -> Form:
    """sum_j coeffs[j] * x^-j."""
    poly = _polynomial(coeffs)
    return lambda x: poly(1.0 / x)


@register_form("inverse_product")
def _inverse_product(shifts: list[float]) -> Form:
    """1 / prod_s (x + s)."""
    shifts = [float(s) for s in shifts]

    def fn(x):
        result = np.ones_like(x)
        for s in shifts:
            result = result / (x + s)
        return result

    return fn


# Logarithm bounds in x


@register_form("x_over_1px")
def _x_over_1px() -> Form:
    return lambda x: x / (1.0 + x)


@register_form("x_over_sqrt_shift")
def _x_over_sqrt_shift(shift: float = 1.0) -> Form:
    """x / sqrt(x + shift)."""
    return lambda x: x / np.sqrt(x + shift)


@register_form("pade")
def _pade(shift: float = 2.0) -> Form:
    """2x / (x + shift)."""
    return lambda x: 2.0 * x / (x + shift)


@register_form("log1p_taylor")
def _log1p_taylor(order: int) -> Form:
    """Taylor polynomial of ln(1+x) at 0 up to x^order."""
    coeffs = [0.0] + [(-1.0) ** (j - 1) / j for j in range(1, order + 1)]
    return _polynomial(coeffs)


@register_form("rational_upper")
def _rational_upper(shift: float = 2.0) -> Form:
    """x (x + shift) / (2 (x + 1))."""
    return lambda x: x * (x + shift) / (2.0 * (x + 1.0))


# Logarithm bounds in 1/x


@register_form("recip_log1p")
def _recip_log1p(power: float = 1.0) -> Form:
    """ln^power(1 + 1/x)."""
    if power == 1.0:
        return lambda x: np.log1p(1.0 / x)
    return lambda x: np.log1p(1.0 / x) ** power


@register_form("recip_shift")
def _recip_shift(shift: float = 0.0) -> Form:
    """1 / (x + shift)."""
    return lambda x: 1.0 / (x + shift)


@register_form("recip_geometric")
def _recip_geometric(a: float, b: float) -> Form:
    """1 / sqrt((x + a)(x + b))."""
    return lambda x: 1.0 / np.sqrt((x + a) * (x + b))


@register_form("recip_arith")
def _recip_arith(a: float, b: float) -> Form:
    """(1/(x + a) + 1/(x + b)) / 2."""
    return lambda x: 0.5 * (1.0 / (x + a) + 1.0 / (x + b))


@register_form("recip_log1p_taylor")
def _recip_log1p_taylor(order: int) -> Form:
    """Taylor polynomial of ln(1+u) in u = 1/x up to u^order."""
    coeffs = [0.0] + [(-1.0) ** (j - 1) / j for j in range(1, order + 1)]
    return _inverse_polynomial(coeffs)


@register_form("log_power_bound")
def _log_power_bound(n: int) -> Form:
    """1 / ((x + n/2) x^(n-1))."""
    return lambda x: 1.0 / ((x + 0.5 * n) * x ** (n - 1))


@register_form("log_product")
def _log_product() -> Form:
    """x (x + 1) ln^2(1 + 1/x)."""
    return lambda x: x * (x + 1.0) * np.log1p(1.0 / x) ** 2


@register_form("log_square_defect")
def _log_square_defect() -> Form:
    """x ln^2(1 + 1/x) - 1/(x + 1)."""
    return lambda x: x * np.log1p(1.0 / x) ** 2 - 1.0 / (x + 1.0)


@register_form("log_square_series")
def _log_square_series(terms: int) -> Form:
    """1/(x(x+1)) - x^-2 sum_{k<=terms} (-1)^k (1 - a_k) x^-k.

    a_k = sum_{i+j=k} 1/((i+1)(j+1)) are the coefficients of ln^2(1+u) / u^2.
    """
    coeffs = [0.0, 0.0]
    for k in range(int(terms) + 1):
        a_k = math.fsum(1.0 / ((i + 1) * (k - i + 1)) for i in range(k + 1))
        coeffs.append((-1.0) ** k * (1.0 - a_k))
    tail = _inverse_polynomial(coeffs)
    return lambda x: 1.0 / (x * (x + 1.0)) - tail(x)


# The number e


@register_form("compound_power")
def _compound_power(shift: float = 0.0) -> Form:
    """(1 + 1/x)^(x + shift), evaluated through log1p."""
    return lambda x: np.exp((x + shift) * np.log1p(1.0 / x))


@register_form("compound_rational")
def _compound_rational(numerator: list[float], denominator: list[float]) -> Form:
    """(1 + 1/x)^(x + 1/2 - p(x)/q(x)) with ascending coefficient lists p, q."""
    p, q = _polynomial(numerator), _polynomial(denominator)
    return lambda x: np.exp((x + 0.5 - p(x) / q(x)) * np.log1p(1.0 / x))


@register_form("compound_defect")
def _compound_defect() -> Form:
    """ln(e / (1 + 1/x)^x) = 1 - x ln(1 + 1/x)."""
    return lambda x: 1.0 - x * np.log1p(1.0 / x)


# Two-variable forms, called as f(x, y)


@register_form("log_ratio")
def _log_ratio() -> Form:
    return lambda x, y: np.log(x / y)


@register_form("relative_difference")
def _relative_difference(base: str = "x") -> Form:
    """(x - y) / x or (x - y) / y."""
    if base == "x":
        return lambda x, y: (x - y) / x
    if base == "y":
        return lambda x, y: (x - y) / y
    raise ValueError(f"Invalid base {base}")


@register_form("recip_log1p_product")
def _recip_log1p_product() -> Form:
    return lambda x, y: np.log1p(1.0 / x) * np.log1p(1.0 / y)


@register_form("recip_log1p_divided_difference")
def _recip_log1p_divided_difference() -> Form:
    """(ln(1 + 1/y) - ln(1 + 1/x)) / (x - y)."""
    return lambda x, y: (np.log1p(1.0 / y) - np.log1p(1.0 / x)) / (x - y)


# Complex forms, called as f(re, im)


@register_form("complex_log1p_modulus")
def _complex_log1p_modulus() -> Form:
    return lambda re, im: np.abs(complex_log1p(re + 1j * im))


@register_form("complex_modulus")
def _complex_modulus() -> Form:
    return lambda re, im: np.hypot(re, im)


# Series terms and antiderivatives


@register_form("reciprocal_power")
def _reciprocal_power(power: float = 1.0) -> Form:
    """x^-power."""
    return lambda x: x ** (-float(power))


@register_form("power_antiderivative")
def _power_antiderivative(power: float) -> Form:
    """(x^(1 - power) - 1) / (1 - power), the integral of t^-power from 1."""
    exponent = 1.0 - float(power)
    if exponent == 0:
        return _log()
    return lambda x: np.expm1(exponent * np.log(x)) / exponent


@register_form("inverse_sqrt_product")
def _inverse_sqrt_product(shift: float = 1.0) -> Form:
    """1 / sqrt(x (x + shift))."""
    return lambda x: 1.0 / np.sqrt(x * (x + shift))


@register_form("asinh_sqrt")
def _asinh_sqrt(origin: float = 1.0) -> Form:
    """2 asinh(sqrt(x)) - 2 asinh(sqrt(origin))."""
    offset = 2.0 * math.asinh(math.sqrt(origin))
    return lambda x: 2.0 * np.arcsinh(np.sqrt(x)) - offset


@register_form("inverse_sqrt_square_minus_one")
def _inverse_sqrt_square_minus_one() -> Form:
    return lambda x: 1.0 / np.sqrt((x - 1.0) * (x + 1.0))


@register_form("arccosh")
def _arccosh(origin: float = 1.0) -> Form:
    offset = math.acosh(origin)
    return lambda x: np.arccosh(x) - offset


@register_form("inverse_x_log")
def _inverse_x_log() -> Form:
    return lambda x: 1.0 / (x * np.log(x))


@register_form("log_log")
def _log_log(origin: float = math.e) -> Form:
    offset = math.log(math.log(origin))
    return lambda x: np.log(np.log(x)) - offset
