"""Probe Conventions Use Case.

Sign and normalisation conventions for s are easy to get wrong. This use
case evaluates every candidate (s = r(0) or s = i r(0)) x (q = +-i u)
against a PDE snapshot at the leading non-trivial order and reports the
candidate that fits best.
"""

from collections.abc import Sequence
from dataclasses import dataclass, replace
from itertools import product

import numpy as np

from ..domain.config import LEADING_TERM_TOLERANCE, ZERO_MASS_TOLERANCE, PainleveDefaults
from ..domain.entities import AsymptoticSeries, EvolutionState, ReflectionData
from ..domain.errors import DomainError
from ..domain.services import painleve2_solve, sample, series_on_grid
from ..domain.value_objects import ConventionChoice, ScatteringParameters
from ..ports import LoggingPort, TaskExecutorPort

CANDIDATES: tuple[ConventionChoice, ...] = tuple(
    ConventionChoice(s_convention=conv, potential_sign=sign)
    for conv, sign in product(("r0", "i_r0"), (1, -1))
)

# Relative gap below which two candidates count as tied
_TIE_TOLERANCE = 1e-12


def sample_sector(state: EvolutionState, y: np.ndarray) -> np.ndarray:
    """PDE field at x = y (3t)^{1/3} for the snapshot time t."""
    scale = np.cbrt(3.0 * state.t)
    return sample(state, np.asarray(y, dtype=float) * scale)


def candidate_parameters(data: ReflectionData, choice: ConventionChoice) -> ScatteringParameters:
    """Scattering parameters implied by a candidate convention.

    Flipping the potential sign negates r(k) identically.

    Raises:
        ConventionError: If the implied s is not purely imaginary.
        DomainRangeError: If |s| >= 1.
    """
    sign = choice.potential_sign
    s = choice.map_s(sign * data.r0)
    if abs(s) <= ZERO_MASS_TOLERANCE:
        s = 0j
    return ScatteringParameters(
        s=s, r0_prime=sign * data.r0_prime, r0_second=sign * data.r0_second
    )


def leading_order(
    parameters: ScatteringParameters, tolerance: float = LEADING_TERM_TOLERANCE
) -> int:
    """Lowest truncation order with a non-negligible coefficient.

    r'(0) at or below `tolerance` counts as vanishing, so quadrature noise
    in a parity-cancelled r'(0) does not select order 2.
    """
    if not parameters.has_vanishing_s():
        return 1
    return 2 if abs(parameters.r0_prime) > tolerance else 3


@dataclass(frozen=True)
class ProbeConventionsResult:
    """Result of the convention probe.

    Attributes:
        candidates: Every candidate with its error or rejection reason.
        chosen: Best admissible candidate.
        t: Snapshot time used.
    """

    candidates: tuple[ConventionChoice, ...]
    chosen: ConventionChoice
    t: float

    @property
    def flipped(self) -> bool:
        """Whether the best candidate differs from the fixed convention."""
        return not self.chosen.is_default()


class ProbeConventionsUseCase:
    """Use case for the convention probe."""

    def __init__(self, executor: TaskExecutorPort, logger: LoggingPort) -> None:
        """Initialize the use case.

        Args:
            executor: Parallel map over candidates.
            logger: Logging port for structured logging.
        """
        self._executor = executor
        self._logger = logger

    def _evaluate(
        self,
        choice: ConventionChoice,
        data: ReflectionData,
        u_pde: np.ndarray,
        y: np.ndarray,
        t: float,
    ) -> ConventionChoice:
        try:
            parameters = candidate_parameters(data, choice)
            painleve = None
            if not parameters.has_vanishing_s():
                y_min = min(PainleveDefaults().y_min, float(np.min(y)))
                painleve = painleve2_solve(parameters.s, y_min=y_min)
            series = AsymptoticSeries(
                order=leading_order(parameters), parameters=parameters, painleve=painleve
            )
            error = float(np.max(np.abs(u_pde - series_on_grid(y, t, series))))
        except DomainError as exc:
            return replace(choice, admissible=False, reason=str(exc))
        return replace(choice, error=error)

    def execute(
        self,
        data: ReflectionData,
        snapshot: EvolutionState,
        y: Sequence[float] | np.ndarray,
    ) -> ProbeConventionsResult:
        """Evaluate all candidates against one snapshot.

        Args:
            data: Reflection data under the fixed convention.
            snapshot: PDE state, normally the first sample time.
            y: Similarity grid of the sector.

        Returns:
            ProbeConventionsResult; the fixed convention wins ties.
        """
        y = np.asarray(y, dtype=float)
        t = snapshot.t
        self._logger.info("Probing conventions", t=t, candidates=len(CANDIDATES))
        u_pde = sample_sector(snapshot, y)

        evaluated = tuple(
            self._executor.map(lambda c: self._evaluate(c, data, u_pde, y, t), CANDIDATES)
        )
        admissible = [c for c in evaluated if c.admissible and c.error is not None]
        chosen = ConventionChoice.default()
        if admissible:
            best = min(admissible, key=lambda c: c.error or 0.0)
            default = next((c for c in admissible if c.is_default()), None)
            if default is not None and (default.error or 0.0) <= (best.error or 0.0) * (
                1.0 + _TIE_TOLERANCE
            ):
                best = default
            chosen = best

        for candidate in evaluated:
            self._logger.debug(
                "Convention candidate",
                label=candidate.label,
                error=candidate.error,
                admissible=candidate.admissible,
                reason=candidate.reason,
            )
        if not chosen.is_default():
            self._logger.warning(
                "Convention probe prefers a non-default convention",
                chosen=chosen.label,
                error=chosen.error,
            )
        return ProbeConventionsResult(candidates=evaluated, chosen=chosen, t=t)
