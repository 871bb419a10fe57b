"""Painlevé II service.

Real Ablowitz-Segur solutions of u'' = y u + 2 u^3 with u ~ alpha Ai(y),
alpha = i s, as y -> +infinity.

The primary scheme shoots leftward from an anchor far to the right, where
the solution is indistinguishable from alpha Ai, using an explicit 8th-order
Runge-Kutta method with dense output. Leftward integration is stable because
the recessive Airy branch grows in that direction. When shooting fails
(blow-up, non-finite values, residual above target even at the tightest
tolerance) a global Chebyshev collocation solve is used instead, with the
left boundary value supplied by the oscillatory connection formula.
"""

import numpy as np
from numpy.polynomial import Chebyshev
from scipy.integrate import solve_ivp
from scipy.linalg import solve as dense_solve
from scipy.special import airy, loggamma
from tenacity import RetryError, Retrying, retry_if_exception_type, stop_after_attempt

from ..config import (
    BLOWUP_BOUND,
    MIN_PAINLEVE_Y_MAX,
    PAINLEVE_RESIDUAL_TOLERANCE,
    SHOOTING_ATOL,
    SHOOTING_RTOLS,
    PainleveDefaults,
)
from ..entities import PainleveSolution
from ..errors import DomainRangeError, SolverError
from ..value_objects import StokesData
from .chebyshev import chebyshev_extreme_points, chebyshev_nodes, differentiation_matrices

_NEWTON_MAX_ITERATIONS = 60
_NEWTON_TOLERANCE = 1e-13


def _rhs(y: float, state: np.ndarray) -> np.ndarray:
    u, up = state
    return np.array([up, y * u + 2.0 * u**3])


def _blowup(y: float, state: np.ndarray) -> float:
    return BLOWUP_BOUND - abs(state[0])


_blowup.terminal = True  # type: ignore[attr-defined]


def connection_amplitude(alpha: float) -> tuple[float, float]:
    """Amplitude d and phase phi of the oscillatory tail as y -> -infinity.

    d^2 = -ln(1 - alpha^2) / pi, sign(d) = sign(alpha),
    phi = (3/2) d^2 ln 2 + arg Gamma(1 - i d^2 / 2) - pi / 4.
    """
    d2 = -np.log1p(-alpha**2) / np.pi
    d = float(np.sign(alpha) * np.sqrt(d2))
    phi = 1.5 * d2 * np.log(2.0) + float(np.imag(loggamma(1.0 - 0.5j * d2))) - np.pi / 4.0
    return d, float(phi)


def connection_asymptote(y: np.ndarray | float, alpha: float) -> np.ndarray:
    """Leading oscillatory behaviour of u_P for y -> -infinity."""
    y = np.asarray(y, dtype=float)
    d, phi = connection_amplitude(alpha)
    x = -y
    return d * x ** (-0.25) * np.sin(2.0 / 3.0 * x**1.5 - 0.75 * d**2 * np.log(x) - phi)


def _tabulate(
    stokes: StokesData,
    series: Chebyshev,
    deriv_series: Chebyshev,
    node_count: int,
    method: str,
) -> PainleveSolution:
    y_min, y_max = series.domain
    nodes = chebyshev_nodes(y_min, y_max, node_count)
    values = series(nodes)
    derivs = deriv_series(nodes)
    second = deriv_series.deriv()(nodes)
    residual = float(np.max(np.abs(second - nodes * values - 2.0 * values**3)))
    return PainleveSolution(
        stokes=stokes,
        nodes=nodes,
        values=values,
        derivs=derivs,
        series=series,
        deriv_series=deriv_series,
        residual_max=residual,
        method=method,
    )


def _shoot(
    stokes: StokesData,
    y_min: float,
    y_max: float,
    anchor: float,
    node_count: int,
    rtol: float,
) -> PainleveSolution:
    alpha = stokes.airy_amplitude
    start = max(y_max, anchor)
    ai, aip, _, _ = airy(start)
    sol = solve_ivp(
        _rhs,
        (start, y_min),
        np.array([alpha * ai, alpha * aip]),
        method="DOP853",
        rtol=rtol,
        atol=SHOOTING_ATOL,
        dense_output=True,
        events=_blowup,
    )
    if sol.status != 0 or not sol.success:
        raise SolverError("Leftward shooting did not reach y_min", sol.message)
    nodes = chebyshev_nodes(y_min, y_max, node_count)
    state = sol.sol(nodes)
    if not np.all(np.isfinite(state)):
        raise SolverError("Shooting produced non-finite values", rtol)
    domain = [y_min, y_max]
    series = Chebyshev.fit(nodes, state[0], deg=node_count - 1, domain=domain)
    deriv_series = Chebyshev.fit(nodes, state[1], deg=node_count - 1, domain=domain)
    solution = _tabulate(stokes, series, deriv_series, node_count, "shooting")
    if solution.residual_max > PAINLEVE_RESIDUAL_TOLERANCE:
        raise SolverError("Painlevé residual above target", solution.residual_max)
    return solution


def _collocate(
    stokes: StokesData, y_min: float, y_max: float, node_count: int
) -> PainleveSolution:
    """Newton iteration for the collocation system on extreme points."""
    alpha = stokes.airy_amplitude
    y = chebyshev_extreme_points(y_min, y_max, node_count)
    d1, d2 = differentiation_matrices(node_count, 2, y_min, y_max)
    right_value = alpha * airy(y_max)[0]
    left_value = float(connection_asymptote(y_min, alpha))

    u = alpha * airy(y)[0]
    u[0], u[-1] = right_value, left_value
    for _ in range(_NEWTON_MAX_ITERATIONS):
        residual = d2 @ u - y * u - 2.0 * u**3
        residual[0] = u[0] - right_value
        residual[-1] = u[-1] - left_value
        if np.max(np.abs(residual)) < _NEWTON_TOLERANCE:
            break
        jacobian = d2 - np.diag(y + 6.0 * u**2)
        jacobian[0, :] = 0.0
        jacobian[-1, :] = 0.0
        jacobian[0, 0] = 1.0
        jacobian[-1, -1] = 1.0
        u = u - dense_solve(jacobian, residual)
        if not np.all(np.isfinite(u)):
            raise SolverError("Collocation Newton iteration diverged", float(stokes.s.imag))
    else:
        raise SolverError("Collocation Newton iteration did not converge", float(stokes.s.imag))

    domain = [y_min, y_max]
    series = Chebyshev.fit(y, u, deg=node_count - 1, domain=domain)
    deriv_series = Chebyshev.fit(y, d1 @ u, deg=node_count - 1, domain=domain)
    return _tabulate(stokes, series, deriv_series, node_count, "collocation")


def painleve2_solve(
    s: complex,
    y_min: float = PainleveDefaults().y_min,
    y_max: float = PainleveDefaults().y_max,
    node_count: int = PainleveDefaults().nodes,
    anchor: float = PainleveDefaults().anchor,
) -> PainleveSolution:
    """Tabulate u_P(y; s, 0, -s) on [y_min, y_max].

    Args:
        s: Stokes parameter, purely imaginary with |s| < 1.
        y_min: Left end of the table.
        y_max: Right end of the table, at least 6.
        node_count: Number of Chebyshev nodes of the table.
        anchor: Shooting starts at max(y_max, anchor).

    Returns:
        PainleveSolution; identically zero for s = 0.

    Raises:
        DomainRangeError: For invalid s or interval.
        SolverError: If both shooting and collocation fail.
    """
    stokes = StokesData.ablowitz_segur(s)
    if not y_min < y_max:
        raise DomainRangeError((y_min, y_max), "Need y_min < y_max")
    if y_max < MIN_PAINLEVE_Y_MAX:
        raise DomainRangeError(y_max, f"y_max must be at least {MIN_PAINLEVE_Y_MAX}")
    if stokes.is_zero():
        return PainleveSolution.zero(y_min, y_max, node_count)

    try:
        for attempt in Retrying(
            retry=retry_if_exception_type(SolverError),
            stop=stop_after_attempt(len(SHOOTING_RTOLS)),
        ):
            with attempt:
                rtol = SHOOTING_RTOLS[attempt.retry_state.attempt_number - 1]
                return _shoot(stokes, y_min, y_max, anchor, node_count, rtol)
    except RetryError:
        pass

    solution = _collocate(stokes, y_min, y_max, node_count)
    if solution.residual_max > PAINLEVE_RESIDUAL_TOLERANCE:
        raise SolverError("Collocation residual above target", solution.residual_max)
    return solution


def leading_model_coefficient(solution: PainleveSolution, y: float) -> np.ndarray:
    """m1^P(y) = 1/2 [[-i I(y), u_P(y)], [u_P(y), i I(y)]], I(y) = int_y^inf u_P^2."""
    u = float(solution.evaluate(y))
    tail = float(solution.tail_integral_of_square(y))
    return 0.5 * np.array([[-1j * tail, u], [u, 1j * tail]], dtype=complex)
