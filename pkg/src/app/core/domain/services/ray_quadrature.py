"""Ray quadrature service.

Gauss-Legendre quadrature along the four rays of the model contour

    Y1 = {r e^{i pi/6}},  Y2 = {r e^{5i pi/6}},
    Y3 = {r e^{-5i pi/6}}, Y4 = {r e^{-i pi/6}},   0 <= r < infinity,

all oriented to the right: Y1 and Y4 outward, Y2 and Y3 toward the origin.
Rays are truncated at radius R; panels are graded geometrically toward the
origin and uniform further out. Accuracy is estimated by comparing against
a contour extended to 1.25 R and against a denser panel rule.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np
from numpy.polynomial.legendre import leggauss
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from ..config import (
    MIN_RAY_RADIUS,
    QUADRATURE_TOLERANCE,
    TRUNCATION_PROBE_FACTOR,
    QuadratureDefaults,
)
from ..errors import DomainRangeError, QuadratureAccuracyError

ComplexFn = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Ray:
    """A half-line r e^{i angle}, traversed outward (+1) or inward (-1)."""

    name: str
    angle: float
    orientation: int

    @property
    def direction(self) -> complex:
        """Unit vector e^{i angle}."""
        return complex(np.exp(1j * self.angle))


Y1 = Ray("Y1", np.pi / 6, 1)
Y2 = Ray("Y2", 5 * np.pi / 6, -1)
Y3 = Ray("Y3", -5 * np.pi / 6, -1)
Y4 = Ray("Y4", -np.pi / 6, 1)

UPPER_RAYS: tuple[Ray, ...] = (Y1, Y2)
LOWER_RAYS: tuple[Ray, ...] = (Y3, Y4)
ALL_RAYS: tuple[Ray, ...] = (Y1, Y2, Y3, Y4)


def cubic_phase(y: np.ndarray | float, z: np.ndarray) -> np.ndarray:
    """theta(y, z) = y z + 4 z^3 / 3."""
    return y * z + 4.0 * z**3 / 3.0


@dataclass(frozen=True)
class RayContour:
    """Panel layout shared by all rays.

    Attributes:
        radius: Truncation radius R.
        nodes_per_panel: Gauss-Legendre nodes per panel.
        panel_width: Width of the uniform outer panels.
        grading_levels: Number of geometric panels next to the origin.
        grading_ratio: Shrink factor between consecutive graded panels.
    """

    radius: float = QuadratureDefaults().radius
    nodes_per_panel: int = QuadratureDefaults().nodes_per_panel
    panel_width: float = QuadratureDefaults().panel_width
    grading_levels: int = QuadratureDefaults().grading_levels
    grading_ratio: float = QuadratureDefaults().grading_ratio

    def __post_init__(self) -> None:
        """Validate the layout."""
        if self.radius <= 0 or self.panel_width <= 0 or self.nodes_per_panel < 2:
            raise DomainRangeError(self, "Invalid ray contour layout")
        if not 0 < self.grading_ratio < 1:
            raise DomainRangeError(self.grading_ratio, "Grading ratio must lie in (0, 1)")

    @cached_property
    def breakpoints(self) -> np.ndarray:
        """Panel end points on [0, R]."""
        inner = min(self.panel_width, self.radius)
        graded = inner * self.grading_ratio ** np.arange(self.grading_levels, 0, -1)
        n_outer = max(1, int(np.ceil((self.radius - inner) / self.panel_width)))
        outer = np.linspace(inner, self.radius, n_outer + 1) if self.radius > inner else [inner]
        return np.concatenate(([0.0], graded, outer))

    @cached_property
    def radial_rule(self) -> tuple[np.ndarray, np.ndarray]:
        """Nodes and positive weights of the composite rule on [0, R]."""
        xi, wi = leggauss(self.nodes_per_panel)
        a, b = self.breakpoints[:-1, None], self.breakpoints[1:, None]
        nodes = 0.5 * (a + b) + 0.5 * (b - a) * xi
        weights = 0.5 * (b - a) * wi
        return nodes.ravel(), np.broadcast_to(weights, nodes.shape).ravel()

    def points(self, rays: Sequence[Ray]) -> tuple[np.ndarray, np.ndarray]:
        """Complex nodes z and oriented weights dz along the given rays."""
        r, w = self.radial_rule
        zs = [r * ray.direction for ray in rays]
        ws = [w * ray.direction * ray.orientation for ray in rays]
        return np.concatenate(zs), np.concatenate(ws)

    def integrate(self, integrand: ComplexFn, rays: Sequence[Ray]) -> complex:
        """Sum integrand(z) dz along the rays."""
        z, dz = self.points(rays)
        return complex(np.sum(integrand(z) * dz))

    def truncation_estimate(self, integrand: ComplexFn, rays: Sequence[Ray]) -> float:
        """Change in the integral when R grows by the probe factor."""
        return abs(self.extended().integrate(integrand, rays) - self.integrate(integrand, rays))

    def extended(self, factor: float = TRUNCATION_PROBE_FACTOR) -> "RayContour":
        """Same inner layout with the radius scaled by factor."""
        return replace(self, radius=self.radius * factor)

    def refined(self, level: int = 1) -> "RayContour":
        """Contour with panels halved `level` times and one more graded panel each."""
        if level <= 0:
            return self
        return replace(
            self,
            panel_width=self.panel_width / 2**level,
            grading_levels=self.grading_levels + level,
        )

    def denser(self, extra_nodes: int = 8) -> "RayContour":
        """Contour with more nodes per panel."""
        return replace(self, nodes_per_panel=self.nodes_per_panel + extra_nodes)


def estimate_ray_integral(
    integrand: ComplexFn, rays: Sequence[Ray], contour: RayContour
) -> tuple[complex, float]:
    """Integrate and estimate the error from truncation and discretisation.

    Returns:
        (value, estimate) where estimate is the larger of the changes seen
        when extending R by 1.25 and when adding nodes per panel.
    """
    value = contour.integrate(integrand, rays)
    truncation = contour.truncation_estimate(integrand, rays)
    discretisation = abs(contour.denser().integrate(integrand, rays) - value)
    return value, max(truncation, discretisation)


def ray_integral(
    integrand: ComplexFn,
    rays: Sequence[Ray],
    contour: RayContour | None = None,
    tolerance: float = QUADRATURE_TOLERANCE,
    attempts: int = QuadratureDefaults().refinement_attempts,
) -> complex:
    """Integrate along rays, refining panels until the estimate meets tolerance.

    Raises:
        QuadratureAccuracyError: If the estimate exceeds tolerance after all
            refinements.
    """
    base = contour or RayContour()
    value = 0j
    for attempt in Retrying(
        retry=retry_if_exception_type(QuadratureAccuracyError),
        stop=stop_after_attempt(attempts),
        reraise=True,
    ):
        with attempt:
            current = base.refined(attempt.retry_state.attempt_number - 1)
            value, estimate = estimate_ray_integral(integrand, rays, current)
            if estimate > tolerance:
                raise QuadratureAccuracyError(estimate, tolerance)
    return value


def airy_moment(
    y: float,
    power: int,
    lower: bool = False,
    contour: RayContour | None = None,
    tolerance: float = QUADRATURE_TOLERANCE,
) -> complex:
    """Integral of z^power e^{+-2i theta(y,z)} over Y1 u Y2 (upper) or Y3 u Y4 (lower)."""
    sign = -1.0 if lower else 1.0
    rays = LOWER_RAYS if lower else UPPER_RAYS
    return ray_integral(
        lambda z: z**power * np.exp(sign * 2j * cubic_phase(y, z)),
        rays,
        contour,
        # The moment is pi Ai^{(j)} / (2i)^j; scale the target accordingly
        tolerance * np.pi / 2.0**power,
    )


def airy_moments_on_grid(
    y: np.ndarray, power: int, lower: bool, contour: RayContour
) -> np.ndarray:
    """Vectorised airy_moment over many y on a fixed contour, without refinement."""
    sign = -1.0 if lower else 1.0
    z, dz = contour.points(LOWER_RAYS if lower else UPPER_RAYS)
    y = np.asarray(y, dtype=float)[:, None]
    return np.sum(z**power * np.exp(sign * 2j * cubic_phase(y, z)) * dz, axis=1)


def airy_via_ray_quadrature(
    y: float,
    order: int = 0,
    lower: bool = False,
    contour: RayContour | None = None,
    tolerance: float = QUADRATURE_TOLERANCE,
) -> complex:
    """Ai^{(order)}(y) recovered from the ray integral representation.

    Upper rays: (2i)^j / pi * int_{Y1 u Y2} z^j e^{2i theta} dz.
    Lower rays: (-1)^j (2i)^j / pi * int_{Y3 u Y4} z^j e^{-2i theta} dz.
    The result is complex; its imaginary part measures quadrature error.

    Raises:
        DomainRangeError: If y lies outside [-5, 5] or order not in {0, 1, 2}.
        QuadratureAccuracyError: If the error estimate stays above tolerance.
    """
    if not -5.0 <= y <= 5.0:
        raise DomainRangeError(y, "Ray quadrature of Ai supports y in [-5, 5]")
    if order not in (0, 1, 2):
        raise DomainRangeError(order, "Airy derivative order must be 0, 1 or 2")
    moment = airy_moment(y, order, lower=lower, contour=contour, tolerance=tolerance)
    factor = (2j) ** order / np.pi
    if lower:
        factor *= (-1) ** order
    return complex(factor * moment)


def validate_radius(contour: RayContour) -> None:
    """Reject contours shorter than the minimum radius."""
    if contour.radius < MIN_RAY_RADIUS:
        raise DomainRangeError(contour.radius, f"Ray radius must be at least {MIN_RAY_RADIUS}")
