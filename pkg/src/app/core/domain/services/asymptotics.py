"""Asymptotic coefficient service.

Coefficients u_j(y) of the expansion u(x, t) ~ sum_j u_j(y) t^{-j/3},
y = x (3t)^{-1/3}, in the Painlevé sector, and the residuals of the ODE
hierarchy they satisfy:

    u1''' - y u1' -   u1 = 2 c (u1^3)'
    u2''' - y u2' - 2 u2 = 6 c (u1^2 u2)'
    u3''' - y u3' - 3 u3 = 6 c (u1 u2^2 + u1^2 u3)'
    u4''' - y u4' - 4 u4 = 2 c (u2^3 + 6 u1 u2 u3 + 3 u1^2 u4)'

with c = 3^{2/3}.
"""

from collections.abc import Callable, Mapping

import numpy as np
from numpy.polynomial import Chebyshev

from ..config import CHEBYSHEV_NODES
from ..entities import AsymptoticSeries, PainleveSolution
from ..errors import DifferentiationError, DomainError, DomainRangeError, UnsupportedOrderError
from ..value_objects import SimilarityPoint
from .airy import airy_eval
from .chebyshev import interpolate

CBRT3 = float(np.cbrt(3.0))
HIERARCHY_CONSTANT = CBRT3**2

# Relative padding of the interpolation interval around the residual grid
_PADDING = 0.25

CoefficientFn = Callable[[np.ndarray], np.ndarray]


def u1_eval(y: np.ndarray | float, painleve: PainleveSolution | None) -> np.ndarray:
    """u1(y) = 3^{-1/3} u_P(y); zero when s = 0 or no table is given."""
    y = np.asarray(y, dtype=float)
    if painleve is None or painleve.stokes.is_zero():
        return np.zeros_like(y)
    return painleve.evaluate(y) / CBRT3


def u2_eval(y: np.ndarray | float, r0_prime: float) -> np.ndarray:
    """u2(y) = r'(0) / (2 * 3^{2/3}) Ai'(y)."""
    return np.asarray(r0_prime / (2.0 * CBRT3**2) * np.asarray(airy_eval(y, 1)), dtype=float)


def u3_eval(y: np.ndarray | float, r0_second: complex) -> np.ndarray:
    """u3(y) = -i r''(0) / 24 * y Ai(y).

    Raises:
        DomainRangeError: If r''(0) is not purely imaginary.
    """
    r0_second = complex(r0_second)
    if r0_second.real != 0.0:
        raise DomainRangeError(r0_second, "r''(0) must be purely imaginary")
    return np.asarray(r0_second.imag / 24.0 * np.asarray(airy_eval(y, 2)), dtype=float)


def coefficient_functions(series: AsymptoticSeries) -> dict[int, CoefficientFn]:
    """The available u_j as callables of y."""
    params = series.parameters
    functions: dict[int, CoefficientFn] = {1: lambda y: u1_eval(y, series.painleve)}
    if params.has_vanishing_s():
        functions[2] = lambda y: u2_eval(y, params.r0_prime)
        functions[3] = lambda y: u3_eval(y, params.r0_second)
    return functions


def series_on_grid(y: np.ndarray, t: float, series: AsymptoticSeries) -> np.ndarray:
    """Truncated sum over j <= N of u_j(y) t^{-j/3} on a y-grid at fixed t."""
    if t < 1.0:
        raise DomainRangeError(t, "Time must satisfy t >= 1")
    y = np.asarray(y, dtype=float)
    functions = coefficient_functions(series)
    total = np.zeros_like(y)
    for j in range(1, series.order + 1):
        total = total + functions[j](y) * t ** (-j / 3.0)
    return total


def series_eval(point: SimilarityPoint, series: AsymptoticSeries) -> float:
    """Truncated asymptotic value at one space-time point."""
    return float(series_on_grid(np.array([point.y]), point.t, series)[0])


def require_order(order: int, series_s: complex) -> None:
    """Reject orders that need s = 0 when s does not vanish."""
    if order >= 2 and complex(series_s) != 0j:
        raise UnsupportedOrderError(order, "Orders beyond the first need s = r(0) = 0")


def _interpolants(
    coefficients: Mapping[int, CoefficientFn], a: float, b: float, nodes: int
) -> dict[int, Chebyshev]:
    out: dict[int, Chebyshev] = {}
    for j in range(1, 5):
        fn = coefficients.get(j)
        if fn is None:
            out[j] = Chebyshev([0.0], domain=[a, b])
            continue
        try:
            out[j] = interpolate(fn, a, b, nodes)
        except DifferentiationError:
            raise
        except DomainError as exc:
            raise DifferentiationError((a, b), f"u{j} is not available: {exc}") from exc
    return out


def hierarchy_residual(
    order: int,
    coefficients: Mapping[int, CoefficientFn],
    y_grid: np.ndarray,
    nodes: int = CHEBYSHEV_NODES,
) -> np.ndarray:
    """Residual of the j-th hierarchy equation on y_grid.

    Each u_j is interpolated by a chopped Chebyshev series on the hull of
    y_grid widened by a quarter of its width on each side; derivatives and
    the nonlinear forcing are formed on the series. Missing coefficients
    count as zero.

    Raises:
        UnsupportedOrderError: If order is not in 1..4.
        DifferentiationError: If a coefficient is unavailable or unresolved
            on the widened interval.
    """
    if order not in (1, 2, 3, 4):
        raise UnsupportedOrderError(order, "Hierarchy equations exist for j = 1..4")
    y = np.asarray(y_grid, dtype=float)
    lo, hi = float(np.min(y)), float(np.max(y))
    if not hi > lo:
        raise DifferentiationError((lo, hi), "Residual grid must span an interval")
    pad = _PADDING * (hi - lo)
    u = _interpolants(coefficients, lo - pad, hi + pad, nodes)
    c = HIERARCHY_CONSTANT

    if order == 1:
        forcing = 2.0 * c * u[1] ** 3
    elif order == 2:
        forcing = 6.0 * c * u[1] ** 2 * u[2]
    elif order == 3:
        forcing = 6.0 * c * (u[1] * u[2] ** 2 + u[1] ** 2 * u[3])
    else:
        forcing = 2.0 * c * (u[2] ** 3 + 6.0 * u[1] * u[2] * u[3] + 3.0 * u[1] ** 2 * u[4])

    uj = u[order]
    return (
        uj.deriv(3)(y)
        - y * uj.deriv(1)(y)
        - order * uj(y)
        - forcing.deriv(1)(y)
    )


def coefficient_table(y: np.ndarray, series: AsymptoticSeries) -> dict[str, np.ndarray]:
    """Columns y, u1, u2, u3 for the coefficient table (u2, u3 zero when s != 0)."""
    y = np.asarray(y, dtype=float)
    functions = coefficient_functions(series)
    zeros = np.zeros_like(y)
    return {
        "y": y,
        "u1": functions[1](y),
        "u2": functions[2](y) if 2 in functions else zeros,
        "u3": functions[3](y) if 3 in functions else zeros,
    }
