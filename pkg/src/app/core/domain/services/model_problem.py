"""Model Riemann-Hilbert problem service.

Coefficients of m^Y(z) = I + m11 / z + (m12 + m21) / z^2 + ... for the jump

    [[1, 0], [p(z) e^{2i theta}, 1]]           on Y1 u Y2,
    [[1, -p*(z) e^{-2i theta}], [0, 1]]        on Y3 u Y4,

theta = y z + 4 z^3 / 3, p(z) = p1 z + p2 z^2 (s = 0), p1 real, p2 imaginary.
Closed forms use Airy values; the quadrature route integrates the jump
along the rays and obtains int_Y mu1 w1 from the y-derivative identity
d/dy int_Y mu1 w1 = [W_up, W_lo] / pi, with W_up, W_lo the integrals of w1
over the upper and lower rays.
"""

import numpy as np
from numpy.polynomial.legendre import leggauss

from ..config import NESTED_NODES_PER_PANEL, QUADRATURE_TOLERANCE, QuadratureDefaults
from ..entities import (
    SIGMA1,
    SIGMA3,
    ModelCoefficients,
    PainleveSolution,
)
from ..errors import DomainRangeError, UnsupportedOrderError
from ..value_objects import ScatteringParameters
from .airy import airy_eval, airy_prime_square_tail
from .asymptotics import CBRT3
from .painleve import leading_model_coefficient
from .ray_quadrature import (
    LOWER_RAYS,
    UPPER_RAYS,
    RayContour,
    airy_moment,
    airy_moments_on_grid,
    cubic_phase,
    validate_radius,
)

# sigma3 sigma1
_ANTI = np.array([[0, 1], [-1, 0]], dtype=complex)

# Gauss-Legendre panels for the y-integral of F' (unit panels)
_TAIL_PANEL_NODES = 16


def _validate_parameters(p1: float, p2: complex) -> None:
    if complex(p2).real != 0.0:
        raise DomainRangeError(p2, "p2 must be purely imaginary")
    if not np.isfinite(p1) or not np.isfinite(complex(p2)):
        raise DomainRangeError((p1, p2), "Parameters must be finite")


def closed_form_coefficients(y: float, p1: float, p2: complex) -> ModelCoefficients:
    """m11, m12, m21 from their Airy closed forms.

    m11 = (p1/4) Ai' sigma1,
    m12 = (p1^2/8i) (int_y^inf Ai'^2) sigma3 + (p2/8i) Ai'' sigma1,
    m21 = (p1/2 pi i)(pi Ai''/4) [[0, -1], [1, 0]].
    """
    _validate_parameters(p1, p2)
    aip = float(airy_eval(y, 1))
    aipp = float(airy_eval(y, 2))
    tail = airy_prime_square_tail(y)
    m11 = p1 / 4.0 * aip * SIGMA1
    m12 = p1**2 / 8j * tail * SIGMA3 + complex(p2) / 8j * aipp * SIGMA1
    m21 = p1 / (2j * np.pi) * (np.pi * aipp / 4.0) * np.array([[0, -1], [1, 0]], dtype=complex)
    return ModelCoefficients(y=y, p1=p1, p2=complex(p2), m11=m11, m12=m12, m21=m21)


def m21_structured_form(y: float, p1: float) -> np.ndarray:
    """-(p1/8i) Ai''(y) sigma3 sigma1, the structured form of m21."""
    return -p1 / 8j * float(airy_eval(y, 2)) * _ANTI


def _moment_matrix(upper: complex, lower: complex, lower_sign: float) -> np.ndarray:
    """[[0, lower_sign * lower], [upper, 0]]."""
    return np.array([[0, lower_sign * lower], [upper, 0]], dtype=complex)


def mu1_w1_by_quadrature(
    y: float,
    p1: float,
    contour: RayContour,
    extent: float = QuadratureDefaults().tail_extent,
) -> np.ndarray:
    """int_Y mu1 w1 dz as a full 2x2 matrix, via -int_y^inf [W_up, W_lo] / pi dy'.

    W_up = p1 [[0, 0], [U1, 0]] and W_lo = p1 [[0, -L1], [0, 0]] come from
    ray quadrature of the first Airy moments at Gauss-Legendre nodes in y'
    on [y, y + extent]; beyond that the integrand is negligible.
    """
    xi, wi = leggauss(_TAIL_PANEL_NODES)
    edges = np.linspace(y, y + extent, int(np.ceil(extent)) + 1)
    a, b = edges[:-1, None], edges[1:, None]
    nodes = (0.5 * (a + b) + 0.5 * (b - a) * xi).ravel()
    weights = np.broadcast_to(0.5 * (b - a) * wi, (a.size, xi.size)).ravel()
    w_up = np.zeros((nodes.size, 2, 2), dtype=complex)
    w_lo = np.zeros((nodes.size, 2, 2), dtype=complex)
    w_up[:, 1, 0] = p1 * airy_moments_on_grid(nodes, 1, False, contour)
    w_lo[:, 0, 1] = -p1 * airy_moments_on_grid(nodes, 1, True, contour)
    commutator = w_up @ w_lo - w_lo @ w_up
    return -np.einsum("n,nij->ij", weights, commutator) / np.pi


def quadrature_coefficients(
    y: float,
    p1: float,
    p2: complex,
    contour: RayContour | None = None,
    tolerance: float = QUADRATURE_TOLERANCE,
) -> ModelCoefficients:
    """m11, m12, m21 by contour quadrature of the jump.

    m11 = -(1/2 pi i) int_Y w1,  m21 = -(1/2 pi i) int_Y z w1,
    m12 = -(1/2 pi i) (int_Y w2 + int_Y mu1 w1).

    Raises:
        DomainRangeError: If the ray radius is below 6 or p2 is not imaginary.
        QuadratureAccuracyError: If a ray integral misses tolerance.
    """
    contour = contour or RayContour()
    validate_radius(contour)
    _validate_parameters(p1, p2)
    pre = -1.0 / (2j * np.pi)

    def moments(power: int) -> tuple[complex, complex]:
        return (
            airy_moment(y, power, lower=False, contour=contour, tolerance=tolerance),
            airy_moment(y, power, lower=True, contour=contour, tolerance=tolerance),
        )

    u1, l1 = moments(1)
    u2, l2 = moments(2)
    m11 = pre * p1 * _moment_matrix(u1, l1, -1.0)
    m21 = pre * p1 * _moment_matrix(u2, l2, -1.0)
    mu_w = mu1_w1_by_quadrature(y, p1, contour)
    m12 = pre * (complex(p2) * _moment_matrix(u2, l2, 1.0) + mu_w)
    return ModelCoefficients(
        y=y, p1=p1, p2=complex(p2), m11=m11, m12=m12, m21=m21, source="quadrature"
    )


def nested_f1(y: float, contour: RayContour | None = None) -> complex:
    """F1(y) = int_{Y1 u Y2} int_{Y3 u Y4} s z e^{-2i theta(s)} e^{2i theta(z)} / (s - z) ds dz."""
    contour = contour or RayContour(nodes_per_panel=NESTED_NODES_PER_PANEL)
    z, dz = contour.points(UPPER_RAYS)
    s, ds = contour.points(LOWER_RAYS)
    fz = z * np.exp(2j * cubic_phase(y, z)) * dz
    fs = s * np.exp(-2j * cubic_phase(y, s)) * ds
    kernel = 1.0 / (s[None, :] - z[:, None])
    return complex(fz @ kernel @ fs)


def f1_closed_form(y: float) -> complex:
    """F1(y) = (i pi^2 / 2) int_y^inf Ai'^2."""
    return 0.5j * np.pi**2 * airy_prime_square_tail(y)


def first_order_density(
    y: float, p1: float, z: complex | np.ndarray, contour: RayContour | None = None
) -> np.ndarray:
    """mu1(z) = C(w1)(z) off the contour; shape (..., 2, 2).

    mu1 = (p1 / 2 pi i) [[0, -int_{Y3 u Y4} s e^{-2i theta(s)} / (s - z) ds],
                         [int_{Y1 u Y2} s e^{2i theta(s)} / (s - z) ds, 0]].
    """
    contour = contour or RayContour()
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    su, dsu = contour.points(UPPER_RAYS)
    sl, dsl = contour.points(LOWER_RAYS)
    upper = (su * np.exp(2j * cubic_phase(y, su)) * dsu) @ (1.0 / (su[:, None] - z[None, :]))
    lower = (sl * np.exp(-2j * cubic_phase(y, sl)) * dsl) @ (1.0 / (sl[:, None] - z[None, :]))
    out = np.zeros(z.shape + (2, 2), dtype=complex)
    out[..., 0, 1] = -lower
    out[..., 1, 0] = upper
    return p1 / (2j * np.pi) * out


def g_coefficients(
    y: float,
    parameters: ScatteringParameters,
    painleve: PainleveSolution | None = None,
    orders: tuple[int, ...] = (1, 2, 3),
) -> dict[int, np.ndarray]:
    """Matrices g_j(y) with u_j = -2 (g_j)_21.

    g1 = -3^{-1/3} m1^P(y) from u_P and its tail integral of squares;
    for s = 0, g2 = -3^{-1/3} m11 and g3 = -3^{-1/3} m12 with p1, p2 from
    r'(0), r''(0).

    Raises:
        UnsupportedOrderError: If g2 or g3 is requested while s != 0.
        DomainRangeError: If g1 is requested for s != 0 without a Painlevé table.
    """
    out: dict[int, np.ndarray] = {}
    vanishing = parameters.has_vanishing_s()
    if any(j >= 2 for j in orders) and not vanishing:
        raise UnsupportedOrderError(max(orders), "g2 and g3 need s = r(0) = 0")
    if 1 in orders:
        if vanishing:
            out[1] = np.zeros((2, 2), dtype=complex)
        elif painleve is None:
            raise DomainRangeError(parameters.s, "g1 needs the Painlevé solution for s != 0")
        else:
            out[1] = -leading_model_coefficient(painleve, y) / CBRT3
    if vanishing and (2 in orders or 3 in orders):
        coefficients = closed_form_coefficients(y, parameters.p1, parameters.p2)
        if 2 in orders:
            out[2] = -coefficients.m11 / CBRT3
        if 3 in orders:
            out[3] = -coefficients.m12 / CBRT3
    return out
