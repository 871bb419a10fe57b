"""Direct scattering service.

Reflection coefficient of a real potential u0 for the defocusing
Zakharov-Shabat problem with q = i u0 (q = -i u0 for potential_sign = -1):

    psi_x = -i k sigma3 psi + [[0, q], [conj(q), 0]] psi.

In the oscillation-free gauge mu = e^{i k x sigma3} psi the system reads

    mu1' = q e^{2ikx} mu2,   mu2' = conj(q) e^{-2ikx} mu1,   mu(-X) = (1, 0),

and a(k) = mu1(X), b(k) = mu2(X), r(k) = b(k) / a(k). Integration is
classical RK4 vectorised over k, with step 2 dx so that the stage
midpoints coincide with the datum grid.
"""

import numpy as np
from scipy.integrate import trapezoid

from ..config import (
    K_CLUSTER_HALF_WIDTH,
    K_CLUSTER_SPACING,
    K_MAX,
    K_TAIL_POINTS,
    MAX_PHASE_STEP,
    MAX_SCATTERING_STEP,
    MIN_CLUSTER_POINTS,
    STRUCTURE_TOLERANCE,
    SYMMETRY_TOLERANCE,
)
from ..entities import InitialDatum, ReflectionData
from ..errors import ConventionError, DomainRangeError, SolverError

_BORN_CHUNK = 32

# Centred differences at h, 2h, 3h, 4h enter the extrapolation
_MAX_RICHARDSON_LEVELS = 4


def clustered_k_grid(
    half_width: float = K_CLUSTER_HALF_WIDTH,
    spacing: float = K_CLUSTER_SPACING,
    k_max: float = K_MAX,
    tail_points: int = K_TAIL_POINTS,
) -> np.ndarray:
    """Symmetric k-grid: uniform around 0, geometric out to k_max."""
    n_cluster = int(round(half_width / spacing))
    cluster = spacing * np.arange(n_cluster + 1)
    tail = np.geomspace(cluster[-1], k_max, tail_points + 1)[1:]
    positive = np.concatenate((cluster, tail))
    return np.concatenate((-positive[:0:-1], positive))


def max_stable_step(k_grid: np.ndarray) -> float:
    """Largest admissible RK4 step for the given wavenumbers."""
    k_abs = float(np.max(np.abs(k_grid))) if np.size(k_grid) else 0.0
    return min(MAX_SCATTERING_STEP, MAX_PHASE_STEP / k_abs) if k_abs > 0 else MAX_SCATTERING_STEP


def scattering_coefficients(
    datum: InitialDatum, k: np.ndarray, potential_sign: int = 1
) -> tuple[np.ndarray, np.ndarray]:
    """Transmission inverse a(k) and b(k) by RK4 across the datum grid.

    Raises:
        SolverError: If the step 2 dx violates the stability bound or the
            integration produces non-finite values.
    """
    k = np.asarray(k, dtype=float)
    dx = datum.spacing
    h = 2.0 * dx
    if h > max_stable_step(k) * (1.0 + 1e-12):
        raise SolverError("Scattering step too large for max |k|", h)

    x = datum.grid
    q = 1j * potential_sign * datum.values
    n = x.size if x.size % 2 == 1 else x.size - 1

    mu1 = np.ones_like(k, dtype=complex)
    mu2 = np.zeros_like(k, dtype=complex)

    def coupling(j: int) -> tuple[np.ndarray, np.ndarray]:
        phase = np.exp(2j * k * x[j])
        return q[j] * phase, np.conj(q[j]) * np.conj(phase)

    for j in range(0, n - 1, 2):
        c0, d0 = coupling(j)
        c1, d1 = coupling(j + 1)
        c2, d2 = coupling(j + 2)
        k1a, k1b = c0 * mu2, d0 * mu1
        k2a, k2b = c1 * (mu2 + 0.5 * h * k1b), d1 * (mu1 + 0.5 * h * k1a)
        k3a, k3b = c1 * (mu2 + 0.5 * h * k2b), d1 * (mu1 + 0.5 * h * k2a)
        k4a, k4b = c2 * (mu2 + h * k3b), d2 * (mu1 + h * k3a)
        mu1 = mu1 + h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a)
        mu2 = mu2 + h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b)

    if not (np.all(np.isfinite(mu1)) and np.all(np.isfinite(mu2))):
        raise SolverError("Scattering integration produced non-finite values", datum.name)
    return mu1, mu2


def reflection_values(datum: InitialDatum, k: np.ndarray, potential_sign: int = 1) -> np.ndarray:
    """r(k) = b(k) / a(k) on an arbitrary set of wavenumbers."""
    if datum.is_zero():
        return np.zeros(np.shape(k), dtype=complex)
    a, b = scattering_coefficients(datum, k, potential_sign)
    return b / a


def symmetry_residual(k_grid: np.ndarray, r_values: np.ndarray) -> float:
    """max |r(k) + conj(r(-k))| over a symmetric grid."""
    return float(np.max(np.abs(r_values + np.conj(r_values[::-1])))) if r_values.size else 0.0


def _richardson(estimates: np.ndarray, multiples: np.ndarray) -> complex:
    """Extrapolate centred-difference estimates at steps m h to h = 0 in powers of h^2."""
    vandermonde = np.vander(multiples**2, increasing=True)
    return complex(np.linalg.solve(vandermonde, estimates)[0])


def derivatives_from_samples(
    k_grid: np.ndarray, r_values: np.ndarray
) -> tuple[complex, float, complex]:
    """r(0), r'(0), r''(0) by Richardson-extrapolated centred differences.

    Centred differences at steps h, 2h, ... over the uniform cluster around
    0 (up to 4h) are extrapolated to h = 0. The raw values must already show
    the structure r(0) in iR, r'(0) in R, r''(0) in iR to 1e-8; the
    structure is then enforced exactly.

    Raises:
        DomainRangeError: If the grid lacks a uniform cluster around 0.
        ConventionError: If the raw structure is violated.
    """
    k = np.asarray(k_grid, dtype=float)
    r = np.asarray(r_values, dtype=complex)
    zero = np.nonzero(k == 0.0)[0]
    if zero.size != 1:
        raise DomainRangeError("k_grid", "k-grid must contain k = 0 exactly once")
    if np.count_nonzero(np.abs(k) <= K_CLUSTER_HALF_WIDTH + 1e-12) < MIN_CLUSTER_POINTS:
        raise DomainRangeError("k_grid", f"Need {MIN_CLUSTER_POINTS} points with |k| <= 0.1")
    i0 = int(zero[0])
    if i0 < 2 or i0 + 2 >= k.size:
        raise DomainRangeError("k_grid", "Need two points on each side of k = 0")
    h = k[i0 + 1]
    levels = 2
    while levels < _MAX_RICHARDSON_LEVELS and i0 - levels - 1 >= 0 and i0 + levels + 1 < k.size:
        candidate = k[i0 + levels + 1]
        if abs(candidate - (levels + 1) * h) > 1e-12 * max(1.0, abs(h)):
            break
        levels += 1
    m = np.arange(1, levels + 1)
    offsets = np.concatenate((k[i0 - m] + m * h, k[i0 + m] - m * h))
    if np.max(np.abs(offsets)) > 1e-12 * max(1.0, abs(h)):
        raise DomainRangeError("k_grid", "Points around k = 0 must be uniformly spaced")

    r0 = r[i0]
    plus, minus = r[i0 + m], r[i0 - m]
    r_prime = _richardson((plus - minus) / (2.0 * m * h), m.astype(float))
    r_second = _richardson((plus - 2.0 * r0 + minus) / (m * h) ** 2, m.astype(float))

    for label, violation in (
        ("r(0) must be purely imaginary", abs(r0.real)),
        ("r'(0) must be real", abs(r_prime.imag)),
        ("r''(0) must be purely imaginary", abs(r_second.real)),
    ):
        if violation > STRUCTURE_TOLERANCE:
            raise ConventionError(label, float(violation))
    return complex(0.0, r0.imag), float(r_prime.real), complex(0.0, r_second.imag)


def derivatives_at_zero(data: ReflectionData) -> tuple[complex, float, complex]:
    """(r0, r0_prime, r0_second) re-derived from the sampled r(k) of the data."""
    return derivatives_from_samples(data.k_grid, data.r_values)


def validate_k_grid(k_grid: np.ndarray, r_values: np.ndarray) -> None:
    """Shape and symmetry of the k-grid, checked before any residual is formed.

    Raises:
        DomainRangeError: If the grid is not 1-D, mismatched or asymmetric.
    """
    k = np.asarray(k_grid, dtype=float)
    if k.ndim != 1 or k.shape != np.shape(r_values):
        raise DomainRangeError(np.shape(r_values), "k-grid and r-values must match")
    scale = max(1.0, float(np.max(np.abs(k)))) if k.size else 1.0
    if not np.allclose(k, -k[::-1], rtol=0.0, atol=1e-14 * scale):
        raise DomainRangeError("k_grid", "k-grid must be symmetric about 0")


def assemble_reflection(k_grid: np.ndarray, r_values: np.ndarray) -> ReflectionData:
    """Validate the grid and the symmetry, then derive the data at k = 0.

    Raises:
        DomainRangeError: If the k-grid is not symmetric about 0.
        ConventionError: If r(k) = -conj(r(-k)) fails beyond 1e-8.
    """
    validate_k_grid(k_grid, r_values)
    residual = symmetry_residual(k_grid, r_values)
    if residual > STRUCTURE_TOLERANCE:
        raise ConventionError("Reflection coefficient violates r(k) = -conj(r(-k))", residual)
    r0, r0_prime, r0_second = derivatives_from_samples(k_grid, r_values)
    return ReflectionData(
        k_grid=k_grid,
        r_values=r_values,
        r0=r0,
        r0_prime=r0_prime,
        r0_second=r0_second,
        symmetry_residual=residual,
    )


def compute_reflection(
    datum: InitialDatum, k_grid: np.ndarray | None = None, potential_sign: int = 1
) -> ReflectionData:
    """Reflection data of a datum on a symmetric k-grid (clustered by default)."""
    k = clustered_k_grid() if k_grid is None else np.asarray(k_grid, dtype=float)
    return assemble_reflection(k, reflection_values(datum, k, potential_sign))


def symmetry_within_tolerance(data: ReflectionData) -> bool:
    """Whether the symmetry residual meets the 1e-10 target."""
    return data.symmetry_residual <= SYMMETRY_TOLERANCE


def born_reflection(datum: InitialDatum, k: np.ndarray, potential_sign: int = 1) -> np.ndarray:
    """First-order reflection -i int u0(x) e^{-2ikx} dx (times potential_sign)."""
    k = np.atleast_1d(np.asarray(k, dtype=float))
    out = np.empty(k.shape, dtype=complex)
    for start in range(0, k.size, _BORN_CHUNK):
        chunk = k[start : start + _BORN_CHUNK]
        kernel = np.exp(-2j * np.outer(chunk, datum.grid))
        out[start : start + _BORN_CHUNK] = trapezoid(kernel * datum.values, datum.grid, axis=1)
    return -1j * potential_sign * out


def linear_reconstruction(data: ReflectionData, x: np.ndarray, t: float) -> np.ndarray:
    """Linearised recovery u(x, t) ~ (i/pi) int r(k) e^{2ikx + 8ik^3 t} dk."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    k = data.k_grid
    phase = np.exp(1j * (2.0 * np.outer(x, k) + 8.0 * k**3 * t))
    integral = trapezoid(phase * data.r_values, k, axis=1)
    return np.real(1j / np.pi * integral)


def jump_matrix(r: complex, x: float, t: float, k: float) -> np.ndarray:
    """v(x, t, k) = [[1 - |r|^2, -conj(r) e^{-t Phi}], [r e^{t Phi}, 1]], t Phi = 2ikx + 8ik^3 t."""
    e = np.exp(2j * k * x + 8j * k**3 * t)
    return np.array(
        [[1.0 - abs(r) ** 2, -np.conj(r) / e], [r * e, 1.0]],
        dtype=complex,
    )


def jump_symmetry_residual(v: np.ndarray) -> float:
    """max |v - sigma1 conj(v)^{-1} sigma1| for a jump on the real line."""
    sigma1 = np.array([[0, 1], [1, 0]], dtype=complex)
    return float(np.max(np.abs(v - sigma1 @ np.linalg.inv(np.conj(v)) @ sigma1)))
