"""Command-line interface.

Subcommands mirror the toolkit operations:

    scatter   reflection data of an initial datum
    evolve    reference PDE snapshots
    painleve  Ablowitz-Segur table u_P(y; s)
    coeffs    coefficient table u1, u2, u3 with hierarchy checks
    rh-check  model-problem coefficients, closed form against quadrature
    verify    end-to-end decay-exponent verification

Every command writes its artifacts and a manifest.json into --out. The
exit code is 0 when every pass flag holds, 1 on a failed verification,
and 2/3/4 for usage, domain and numerical errors.
"""

import argparse
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from src.app.cli.exceptions import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    handle_domain_error,
)
from src.app.cli.schemas import (
    ExperimentConfigSchema,
    RunManifestSchema,
    VerificationReportSchema,
)
from src.app.core.domain.config import (
    DEFAULT_SECTOR_WIDTH,
    DEFAULT_TIMES,
    DEFAULT_Y_POINTS,
    PAINLEVE_RESIDUAL_TOLERANCE,
    TOLERANCE_PROFILES,
    PainleveDefaults,
)
from src.app.core.domain.entities import InitialDatum
from src.app.core.domain.errors import DomainError, UsageError
from src.app.core.domain.services import CUSTOM_FAMILY, RayContour, builtin_family
from src.app.core.domain.value_objects import ScatteringParameters
from src.app.infrastructure.container import Container
from src.app.infrastructure.logging import configure_logging
from src.app.infrastructure.settings import get_settings

logger = logging.getLogger(__name__)

MANIFEST = "manifest.json"
REPORT = "report.json"

# Negation symmetry u(-s) = -u(s) of the Painlevé table
NEGATION_TOLERANCE = 1e-8


@dataclass(frozen=True)
class CommandOutcome:
    """What a command handler reports back to main."""

    passed: bool
    artifacts: tuple[str, ...]


Handler = Callable[[argparse.Namespace, Container], CommandOutcome]


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers: {text}") from exc


def _load_config(args: argparse.Namespace) -> ExperimentConfigSchema | None:
    return ExperimentConfigSchema.from_file(args.config) if args.config else None


def load_datum(args: argparse.Namespace, container: Container) -> InitialDatum:
    """Resolve the initial datum from --config, --datum or --family.

    Raises:
        UsageError: If custom-csv is requested without a file.
    """
    schema = _load_config(args)
    if schema is not None:
        if schema.family == CUSTOM_FAMILY:
            if not schema.datum_path:
                raise UsageError(args.config, "custom-csv needs datum_path")
            return container.datum_reader.read_datum(schema.datum_path)
        return builtin_family(schema.family, schema.family_params)
    if getattr(args, "datum", None):
        return container.datum_reader.read_datum(args.datum)
    return builtin_family(args.family, _family_params(args))


def _family_params(args: argparse.Namespace) -> dict[str, Any]:
    params: dict[str, Any] = {}
    for name in ("epsilon", "width"):
        if getattr(args, name, None) is not None:
            params[name] = getattr(args, name)
    return params


# =============================================================================
# Handlers
# =============================================================================


def run_scatter(args: argparse.Namespace, container: Container) -> CommandOutcome:
    """scatter: reflection data of the datum."""
    datum = load_datum(args, container)
    result = container.compute_reflection().execute(datum, potential_sign=args.potential_sign)
    return CommandOutcome(passed=result.symmetry_ok, artifacts=result.artifacts)


def run_evolve(args: argparse.Namespace, container: Container) -> CommandOutcome:
    """evolve: PDE snapshots at the requested times."""
    datum = load_datum(args, container)
    solver = container.settings.solver
    result = container.evolve_mkdv().execute(
        datum,
        args.times,
        half_period=args.half_period or solver.half_period,
        modes=args.modes or solver.modes,
        dt=args.dt or solver.dt,
        tolerance_profile=args.tolerance_profile or container.settings.tolerance_profile,
    )
    return CommandOutcome(passed=result.conservation_ok, artifacts=result.artifacts)


def run_painleve(args: argparse.Namespace, container: Container) -> CommandOutcome:
    """painleve: tabulate u_P(y; s)."""
    result = container.solve_painleve().execute(
        args.s, y_min=args.y_min, y_max=args.y_max, nodes=args.nodes
    )
    passed = result.solution.residual_max <= PAINLEVE_RESIDUAL_TOLERANCE and (
        result.negation_residual is None or result.negation_residual <= NEGATION_TOLERANCE
    )
    return CommandOutcome(passed=passed, artifacts=result.artifacts)


def run_coeffs(args: argparse.Namespace, container: Container) -> CommandOutcome:
    """coeffs: coefficient table from explicit parameters or a datum."""
    artifacts: tuple[str, ...] = ()
    if args.r0_prime is not None:
        parameters = ScatteringParameters(
            s=complex(0.0, args.s_imag),
            r0_prime=args.r0_prime,
            r0_second=complex(0.0, args.r0_second_imag),
        )
    else:
        reflection = container.compute_reflection().execute(load_datum(args, container))
        parameters = reflection.data.parameters
        artifacts = reflection.artifacts
    bound = args.sector_width / np.cbrt(3.0)
    y = np.linspace(-bound, bound, args.y_points)
    result = container.tabulate_coefficients().execute(parameters, args.order, y)
    return CommandOutcome(
        passed=result.hierarchy_ok and result.consistency_ok,
        artifacts=artifacts + result.artifacts,
    )


def run_rh_check(args: argparse.Namespace, container: Container) -> CommandOutcome:
    """rh-check: closed form against quadrature on the parameter grid."""
    quad = container.settings.quadrature
    contour = RayContour(
        radius=args.radius or quad.radius,
        nodes_per_panel=args.nodes_per_panel or quad.nodes_per_panel,
    )
    result = container.check_model_coefficients().execute(
        y_values=args.y_values, contour=contour
    )
    return CommandOutcome(passed=result.passed, artifacts=result.artifacts)


def run_verify(args: argparse.Namespace, container: Container) -> CommandOutcome:
    """verify: end-to-end experiment from --config or --family."""
    schema = _load_config(args) or ExperimentConfigSchema(
        family=args.family,
        family_params=_family_params(args),
        order=args.order,
    )
    config = schema.to_domain(container.settings, args.tolerance_profile)
    datum = load_datum(args, container)
    result = container.run_experiment().execute(config, datum)
    report_path = container.artifacts.write_json(
        REPORT, VerificationReportSchema.from_domain(result.report).model_dump(mode="json")
    )
    return CommandOutcome(passed=result.passed, artifacts=result.artifacts + (report_path,))


# =============================================================================
# Parser
# =============================================================================


def _add_datum_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", default="sech", help="Built-in initial data family")
    parser.add_argument("--epsilon", type=float, default=None, help="Family amplitude")
    parser.add_argument("--width", type=float, default=None, help="Family length scale")
    parser.add_argument("--datum", default=None, help="CSV datum with columns x,u0")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with global flags and one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="psv",
        description="Numerical verification of the Painlevé-sector asymptotics of defocusing mKdV",
    )
    parser.add_argument("--config", default=None, help="Experiment JSON file")
    parser.add_argument("--out", default=None, help="Output directory")
    parser.add_argument("--threads", type=int, default=None, help="Worker threads")
    parser.add_argument(
        "--tolerance-profile", choices=sorted(TOLERANCE_PROFILES), default=None
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ...")
    sub = parser.add_subparsers(dest="command", required=True)

    scatter = sub.add_parser("scatter", help="Reflection coefficient of a datum")
    _add_datum_options(scatter)
    scatter.add_argument("--potential-sign", type=int, choices=(1, -1), default=1)
    scatter.set_defaults(handler=run_scatter)

    evolve = sub.add_parser("evolve", help="Reference PDE evolution")
    _add_datum_options(evolve)
    evolve.add_argument("--times", type=_float_list, default=list(DEFAULT_TIMES))
    evolve.add_argument("--half-period", type=float, default=None)
    evolve.add_argument("--modes", type=int, default=None)
    evolve.add_argument("--dt", type=float, default=None)
    evolve.set_defaults(handler=run_evolve)

    painleve = sub.add_parser("painleve", help="Ablowitz-Segur Painlevé II table")
    painleve.add_argument("--s", type=complex, required=True, help="Stokes parameter, e.g. 0.5j")
    painleve.add_argument("--y-min", type=float, default=PainleveDefaults().y_min)
    painleve.add_argument("--y-max", type=float, default=PainleveDefaults().y_max)
    painleve.add_argument("--nodes", type=int, default=PainleveDefaults().nodes)
    painleve.set_defaults(handler=run_painleve)

    coeffs = sub.add_parser("coeffs", help="Coefficient table u1, u2, u3")
    _add_datum_options(coeffs)
    coeffs.add_argument("--order", type=int, default=1)
    coeffs.add_argument("--s-imag", type=float, default=0.0)
    coeffs.add_argument("--r0-prime", type=float, default=None)
    coeffs.add_argument("--r0-second-imag", type=float, default=0.0)
    coeffs.add_argument("--sector-width", type=float, default=DEFAULT_SECTOR_WIDTH)
    coeffs.add_argument("--y-points", type=int, default=DEFAULT_Y_POINTS)
    coeffs.set_defaults(handler=run_coeffs)

    rh_check = sub.add_parser("rh-check", help="Model-problem coefficient check")
    rh_check.add_argument("--y-values", type=_float_list, default=[-2.0, -1.0, 0.0, 1.0, 2.0])
    rh_check.add_argument("--radius", type=float, default=None)
    rh_check.add_argument("--nodes-per-panel", type=int, default=None)
    rh_check.set_defaults(handler=run_rh_check)

    verify = sub.add_parser("verify", help="End-to-end verification run")
    _add_datum_options(verify)
    verify.add_argument("--order", type=int, default=1)
    verify.set_defaults(handler=run_verify)

    return parser


def _arguments(args: argparse.Namespace) -> dict[str, Any]:
    out = {}
    for key, value in vars(args).items():
        if key == "handler":
            continue
        out[key] = str(value) if isinstance(value, complex) else value
    return out


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run the command and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE

    settings = get_settings()
    configure_logging(args.log_level or settings.log_level, settings.log_format)
    handler: Handler = args.handler
    try:
        container = Container(out_dir=args.out, threads=args.threads, command=args.command)
        outcome = handler(args, container)
        exit_code = EXIT_OK if outcome.passed else EXIT_VERIFICATION_FAILED
        manifest = RunManifestSchema(
            command=args.command,
            arguments=_arguments(args),
            artifacts=list(outcome.artifacts),
            passed=outcome.passed,
            exit_code=exit_code,
        )
        container.artifacts.write_json(MANIFEST, manifest.model_dump(mode="json"))
    except DomainError as exc:
        logger.error("Command failed", extra={"error": exc.__class__.__name__})
        return handle_domain_error(exc)
    return exit_code
