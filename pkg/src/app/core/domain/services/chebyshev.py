"""Chebyshev spectral tools.

Differentiation matrices on Chebyshev extreme points (Weideman-Reddy
construction with the Don-Solomonoff accuracy tricks) and a chopped
Chebyshev-series representation used to differentiate smooth functions
several times without amplifying round-off.
"""

import math
from collections.abc import Callable

import numpy as np
from numpy.polynomial import Chebyshev
from numpy.polynomial.chebyshev import chebpts1
from scipy.linalg import toeplitz

from ..config import CHEBYSHEV_CHOP_TOLERANCE
from ..errors import DifferentiationError, DomainRangeError

_PLATEAU_WIDTH = 16
_PLATEAU_MARGIN = 100.0
_UNRESOLVED_LEVEL = 1e-8


def chebyshev_nodes(a: float, b: float, n: int) -> np.ndarray:
    """First-kind Chebyshev nodes on [a, b], increasing."""
    if n < 2 or not b > a:
        raise DomainRangeError((a, b, n), "Need n >= 2 nodes on a non-empty interval")
    return 0.5 * (a + b) + 0.5 * (b - a) * chebpts1(n)


def chebyshev_extreme_points(a: float, b: float, n: int) -> np.ndarray:
    """Chebyshev extreme points on [a, b] in decreasing order (x_0 = b)."""
    x = np.sin(math.pi * np.arange(n - 1, -1 - n, -2) / (2.0 * (n - 1)))
    return 0.5 * (a + b) + 0.5 * (b - a) * x


def differentiation_matrices(
    n: int, order: int, a: float = -1.0, b: float = 1.0
) -> list[np.ndarray]:
    """Derivative matrices D1..D_order on the extreme points of [a, b].

    Args:
        n: Number of collocation points.
        order: Highest derivative, 0 < order <= n - 1.
        a: Left end of the interval.
        b: Right end of the interval.

    Returns:
        List of n x n matrices acting on values at chebyshev_extreme_points.
    """
    if not 0 < order <= n - 1:
        raise DomainRangeError(order, "Derivative order must satisfy 0 < order <= n - 1")
    n1 = n // 2
    n2 = int(math.ceil(n / 2.0))
    k = np.arange(n).reshape(n, 1)
    th = k * math.pi / (n - 1)

    # x_k - x_j through sin identities, then the flipping trick
    t = np.tile(th / 2.0, n)
    dx = 2.0 * np.sin(t.T + t) * np.sin(t.T - t)
    dx[n1:, :] = -np.flipud(np.fliplr(dx[:n2, :]))
    np.fill_diagonal(dx, 1.0)
    z = 1.0 / dx
    np.fill_diagonal(z, 0.0)

    c = toeplitz((-1.0) ** k)
    c[0, :] *= 2.0
    c[-1, :] *= 2.0
    c[:, 0] /= 2.0
    c[:, -1] /= 2.0

    scale = 2.0 / (b - a)
    matrices = []
    d = np.eye(n)
    for ell in range(order):
        diag = np.diag(d).reshape(n, 1)
        d = (ell + 1) * z * (c * np.tile(diag, n) - d)
        np.fill_diagonal(d, -np.sum(d.T, axis=0))
        matrices.append(d * scale ** (ell + 1))
    return matrices


def chop(series: Chebyshev, tolerance: float = CHEBYSHEV_CHOP_TOLERANCE) -> Chebyshev:
    """Drop trailing coefficients below tolerance relative to the largest."""
    coef = series.coef
    scale = np.max(np.abs(coef)) if coef.size else 0.0
    if scale == 0.0:
        return Chebyshev([0.0], domain=series.domain)
    significant = np.nonzero(np.abs(coef) > tolerance * scale)[0]
    return Chebyshev(coef[: significant[-1] + 1], domain=series.domain)


def interpolate(
    fn: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    n: int,
    tolerance: float = CHEBYSHEV_CHOP_TOLERANCE,
) -> Chebyshev:
    """Chopped Chebyshev interpolant of fn on [a, b] from n first-kind nodes.

    Raises:
        DifferentiationError: If fn is not finite on the nodes or its
            coefficients have not decayed, i.e. it is not resolved smoothly.
    """
    nodes = chebyshev_nodes(a, b, n)
    values = np.asarray(fn(nodes), dtype=float)
    if not np.all(np.isfinite(values)):
        raise DifferentiationError((a, b), "Function is not finite on the Chebyshev grid")
    series = Chebyshev.fit(nodes, values, deg=n - 1, domain=[a, b])
    scale = np.max(np.abs(series.coef))
    if scale == 0.0:
        return Chebyshev([0.0], domain=[a, b])
    # Tabulated inputs carry a noise floor; chop above it
    plateau = float(np.max(np.abs(series.coef[-_PLATEAU_WIDTH:])) / scale)
    if plateau > _UNRESOLVED_LEVEL:
        raise DifferentiationError(plateau, "Chebyshev coefficients have not decayed")
    return chop(series, max(tolerance, _PLATEAU_MARGIN * plateau))
