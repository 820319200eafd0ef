"""``ffrsim run``: simulate one case and write its output bundle."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

import click

from ffrsim.cli_commands._output import (
    EXIT_SIMULATION,
    enable_telemetry,
    fail,
    load_document,
    print_metrics,
    setup_logging,
)

if TYPE_CHECKING:
    from ffrsim.core.coordination.models import StrategyKind

#: ``--strategy`` choices and the strategy kinds they select.
STRATEGY_CHOICES: dict[str, StrategyKind] = {
    "adaptive": "adaptive",
    "bess": "bess_dominant",
    "dc": "dc_dominant",
    "ev": "ev_dominant",
    "custom": "custom",
}


@click.command()
@click.option(
    "--config",
    "-c",
    type=click.Path(dir_okay=False),
    default=None,
    help="Scenario configuration file (JSON or YAML). Defaults apply when omitted.",
)
@click.option(
    "--out",
    "-o",
    type=click.Path(file_okay=False),
    envvar="FFRSIM_OUT",
    default="out",
    show_default=True,
    help="Output directory (env: FFRSIM_OUT).",
)
@click.option(
    "--case",
    "case_id",
    type=click.IntRange(1, 4),
    default=None,
    help="Case to run (default: the config's case, 4).",
)
@click.option(
    "--strategy",
    type=click.Choice(list(STRATEGY_CHOICES)),
    default=None,
    help="Coordination strategy (default: the config's strategy, adaptive).",
)
@click.option("--dt", type=float, default=None, help="Override solver.dt (s).")
@click.option("--duration", type=float, default=None, help="Override solver.duration (s).")
@click.option("--no-plots", is_flag=True, help="Skip SVG figures.")
@click.option("--print-config", is_flag=True, help="Print the fully defaulted config and exit.")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging.")
@click.option("--telemetry", is_flag=True, help="Export OpenTelemetry spans to stdout.")
def run(
    config: str | None,
    out: str,
    case_id: int | None,
    strategy: str | None,
    dt: float | None,
    duration: float | None,
    no_plots: bool,
    print_config: bool,
    verbose: bool,
    telemetry: bool,
) -> None:
    """Run one FFR scenario and write timeseries.csv, metrics.json and plots."""
    from ffrsim.core.errors import ModelConfigurationError, SimulationError
    from ffrsim.core.scenario import build_case, run_scenario
    from ffrsim.reporting import ReportingError, write_run_bundle
    from ffrsim.sdk import ConfigError, apply_overrides

    setup_logging(verbose=verbose)
    if telemetry:
        enable_telemetry()

    document, config_path, raw_hash = load_document(config)
    try:
        document = apply_overrides(document, dt=dt, duration=duration)
    except ConfigError as exc:
        fail(exc.diagnostic(), exc.exit_code)

    if print_config:
        click.echo(document.pretty_json())
        return

    kind = STRATEGY_CHOICES[strategy] if strategy is not None else None
    try:
        scenario = build_case(case_id or document.case, document, kind)
    except ModelConfigurationError as exc:
        fail(str(exc), ConfigError.exit_code)

    try:
        result = run_scenario(scenario)
    except SimulationError as exc:
        fail(f"simulation aborted: {exc}", EXIT_SIMULATION)

    try:
        write_run_bundle(
            result,
            Path(out),
            document,
            plots=not no_plots,
            config_file=config_path,
            raw_hash=raw_hash,
        )
    except ReportingError as exc:
        fail(str(exc), exc.exit_code)

    print_metrics(scenario.label, result.metrics)
