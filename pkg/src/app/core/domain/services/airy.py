"""Airy function service.

Values and derivatives of Ai on the real line, and the tail integrals of
Ai^2 and Ai'^2 that appear in the model-problem coefficients.
"""

import numpy as np
from scipy.integrate import quad
from scipy.special import airy

from ..config import QuadratureDefaults
from ..errors import DomainRangeError, NonFiniteInputError
from ..value_objects import AiryTriple

ArrayLike = float | np.ndarray


def _as_finite(y: ArrayLike, name: str = "y") -> np.ndarray:
    arr = np.asarray(y, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInputError(name, "Airy argument must be finite")
    return arr


def airy_eval(y: ArrayLike, order: int = 0) -> ArrayLike:
    """Evaluate Ai^{(order)}(y) for order in {0, 1, 2}.

    Args:
        y: Real point or array of points.
        order: Derivative order; Ai'' is obtained as y Ai.

    Returns:
        Scalar for scalar input, array otherwise.

    Raises:
        NonFiniteInputError: If y contains NaN or infinity.
        DomainRangeError: If order is not 0, 1 or 2.
    """
    if order not in (0, 1, 2):
        raise DomainRangeError(order, "Airy derivative order must be 0, 1 or 2")
    arr = _as_finite(y)
    ai, aip, _, _ = airy(arr)
    value = (ai, aip, arr * ai)[order]
    return float(value) if np.ndim(value) == 0 else value


def airy_triple(y: float) -> AiryTriple:
    """Return (Ai, Ai', Ai'') at a single point."""
    arr = _as_finite(y)
    ai, aip, _, _ = airy(float(arr))
    return AiryTriple(y=float(arr), ai=float(ai), ai_prime=float(aip), ai_second=float(arr * ai))


def airy_square_tail(y: ArrayLike) -> ArrayLike:
    """Integral of Ai^2 over [y, +infinity), via Ai'(y)^2 - y Ai(y)^2."""
    arr = _as_finite(y)
    ai, aip, _, _ = airy(arr)
    return aip**2 - arr * ai**2


def airy_prime_square_tail_exact(y: ArrayLike) -> ArrayLike:
    """Integral of Ai'^2 over [y, +infinity) from its closed antiderivative.

    (y^2 Ai^2 - y Ai'^2 - 2 Ai Ai') / 3.
    """
    arr = _as_finite(y)
    ai, aip, _, _ = airy(arr)
    return (arr**2 * ai**2 - arr * aip**2 - 2.0 * ai * aip) / 3.0


def airy_prime_square_tail(y: float, extent: float | None = None) -> float:
    """Integral of Ai'^2 over [y, +infinity) by adaptive quadrature.

    Integrates numerically over [y, y + extent] and adds the remainder
    beyond y + extent from the closed antiderivative, which is below 1e-12
    for the default extent.
    """
    y = float(_as_finite(y))
    extent = QuadratureDefaults().tail_extent if extent is None else extent
    upper = y + extent
    head, _ = quad(lambda s: airy(s)[1] ** 2, y, upper, epsabs=1e-14, epsrel=1e-13, limit=200)
    return float(head + airy_prime_square_tail_exact(upper))
