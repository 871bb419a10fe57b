"""Evolve mKdV Use Case.

Integrates u_t - 6 u^2 u_x + u_xxx = 0 with the pseudospectral reference
solver and records a snapshot with health diagnostics at every target time.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from ..domain.config import SolverDefaults, get_tolerance_profile
from ..domain.entities import InitialDatum, Snapshot
from ..domain.services import SolverGrid, evolve
from ..ports import ArtifactWriterPort, LoggingPort

EVOLVE_MANIFEST = "evolve.json"


def snapshot_name(t: float) -> str:
    """CSV file name of the snapshot at time t."""
    return f"snapshot_t{t:g}.csv"


@dataclass(frozen=True)
class EvolveMKdVResult:
    """Result of the evolve use case.

    Attributes:
        snapshots: One snapshot per target time.
        max_mass_drift: Largest relative mass drift.
        max_l2_drift: Largest relative L2 drift.
        max_tail_fraction: Largest edge-band energy share.
        conservation_ok: Both drifts within the profile tolerance.
        artifacts: Paths of the written files.
        grid: Grid the evolution ran on.
    """

    snapshots: tuple[Snapshot, ...]
    max_mass_drift: float
    max_l2_drift: float
    max_tail_fraction: float
    conservation_ok: bool
    artifacts: tuple[str, ...] = ()
    grid: SolverGrid | None = None


class EvolveMKdVUseCase:
    """Use case for the pseudospectral reference evolution."""

    def __init__(self, artifacts: ArtifactWriterPort, logger: LoggingPort) -> None:
        """Initialize the use case.

        Args:
            artifacts: Writer for snapshots and the manifest.
            logger: Logging port for structured logging.
        """
        self._artifacts = artifacts
        self._logger = logger

    def execute(
        self,
        datum: InitialDatum,
        times: Sequence[float],
        half_period: float | None = None,
        modes: int | None = None,
        dt: float = SolverDefaults().dt,
        tolerance_profile: str = "default",
        write_snapshots: bool = True,
    ) -> EvolveMKdVResult:
        """Evolve the datum to every target time.

        Args:
            datum: Initial datum.
            times: Ascending target times.
            half_period: Domain half width L; sized from the last time if None.
            modes: Grid size N, a power of two; sized from the datum if None.
            dt: Nominal time step.
            tolerance_profile: Selects the wrap and drift tolerances.
            write_snapshots: Whether to write one CSV per snapshot.

        Returns:
            EvolveMKdVResult with snapshots and drift summary.

        Raises:
            WrapAroundError: If radiation reaches the domain edge.
            DomainRangeError: If no grid up to MAX_AUTO_MODES resolves the datum.
            InstabilityError: If the field blows up.
        """
        profile = get_tolerance_profile(tolerance_profile)
        grid = SolverGrid.for_horizon(
            datum,
            max(times, default=0.0),
            profile.wrap_tolerance,
            half_period=half_period,
            modes=modes,
        )
        if half_period is None or modes is None:
            self._logger.info(
                "Sized solver grid",
                half_period=grid.half_period,
                modes=grid.modes,
                dealiased_cutoff=grid.dealiased_cutoff,
                horizon=max(times, default=0.0),
            )
        self._logger.info(
            "Evolving mKdV",
            datum=datum.name,
            half_period=grid.half_period,
            modes=grid.modes,
            dt=dt,
            times=list(times),
            profile=profile.name,
        )

        snapshots = tuple(
            evolve(datum, times, grid=grid, dt=dt, wrap_tolerance=profile.wrap_tolerance)
        )
        for snap in snapshots:
            self._logger.debug(
                "Snapshot reached",
                t=snap.t,
                mass_drift=snap.mass_drift,
                l2_drift=snap.l2_drift,
                tail_fraction=snap.tail_fraction,
            )

        max_mass = max((s.mass_drift for s in snapshots), default=0.0)
        max_l2 = max((s.l2_drift for s in snapshots), default=0.0)
        max_tail = max((s.tail_fraction for s in snapshots), default=0.0)
        conservation_ok = max(max_mass, max_l2) <= profile.conservation_drift
        if not conservation_ok:
            self._logger.warning(
                "Conservation drift above tolerance",
                max_mass_drift=max_mass,
                max_l2_drift=max_l2,
                tolerance=profile.conservation_drift,
            )

        paths: list[str] = []
        if write_snapshots:
            for snap in snapshots:
                paths.append(
                    self._artifacts.write_table(
                        snapshot_name(snap.t), {"x": snap.state.x, "u": snap.state.u}
                    )
                )
            paths.append(
                self._artifacts.write_json(
                    EVOLVE_MANIFEST,
                    {
                        "datum": datum.name,
                        "half_period": grid.half_period,
                        "modes": grid.modes,
                        "dt": dt,
                        "snapshots": [
                            {
                                "t": s.t,
                                "mass_drift": s.mass_drift,
                                "l2_drift": s.l2_drift,
                                "tail_fraction": s.tail_fraction,
                            }
                            for s in snapshots
                        ],
                    },
                )
            )

        self._logger.info(
            "Evolution finished",
            max_mass_drift=max_mass,
            max_l2_drift=max_l2,
            max_tail_fraction=max_tail,
        )
        return EvolveMKdVResult(
            snapshots=snapshots,
            max_mass_drift=max_mass,
            max_l2_drift=max_l2,
            max_tail_fraction=max_tail,
            conservation_ok=conservation_ok,
            artifacts=tuple(paths),
            grid=grid,
        )
