"""Shared CLI output formatters and process setup."""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING, NoReturn

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

if TYPE_CHECKING:
    from collections.abc import Sequence

    from ffrsim.core.scenario.batch import BatchCell
    from ffrsim.core.scenario.models import MetricsRecord
    from ffrsim.sdk.models import ConfigDocument

console = Console()
err_console = Console(stderr=True)

EXIT_SIMULATION = 20


def setup_logging(*, verbose: bool) -> None:
    """Route ``ffrsim`` logs to stderr; INFO with ``--verbose``, WARNING otherwise."""
    handler = RichHandler(console=err_console, show_path=False, markup=False)
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[handler],
        force=True,
    )


def enable_telemetry() -> None:
    from ffrsim.utils.telemetry import configure_telemetry

    try:
        configure_telemetry()
    except ImportError as exc:
        err_console.print(f"[yellow]Telemetry disabled:[/yellow] {exc}")


def fail(message: str, exit_code: int) -> NoReturn:
    err_console.print(f"[red]error:[/red] {message}", highlight=False)
    sys.exit(exit_code)


def load_document(config: str | None) -> tuple[ConfigDocument, Path | None, str | None]:
    """Load *config* (or the defaults) and return it with its path and raw-bytes hash.

    Exits with the error's code if the file is missing or invalid.
    """
    from ffrsim.sdk import ConfigDocument, ConfigError, ConfigLoader

    if config is None:
        return ConfigDocument(), None, None
    loader = ConfigLoader(Path(config))
    try:
        document = loader.load()
    except ConfigError as exc:
        fail(exc.diagnostic(), exc.exit_code)
    return document, loader.path, loader.raw_hash


def print_metrics(label: str, metrics: MetricsRecord) -> None:
    """Print the metrics record as one summary line."""
    console.print(f"[bold]{label}[/bold]: {metrics.summary_line()}", highlight=False)


def _cell(value: float | None, fmt: str) -> str:
    return "-" if value is None else format(value, fmt)


def print_batch_table(cells: Sequence[BatchCell]) -> None:
    """Pretty-print the strategy × case matrix as a table."""
    table = Table(title="Strategy × case matrix")
    table.add_column("Strategy", style="cyan")
    table.add_column("Case", justify="right")
    table.add_column("Nadir (Hz)", justify="right")
    table.add_column("RoCoF (Hz/s)", justify="right")
    table.add_column("Recovery (s)", justify="right")
    table.add_column("EV/DC/BESS max (MW)", justify="right")
    table.add_column("FFR energy (MWh)", justify="right")
    table.add_column("Status")

    for cell in cells:
        if cell.result is None:
            table.add_row(
                cell.strategy, str(cell.case_id), *(["-"] * 5), f"[red]{cell.error}[/red]"
            )
            continue
        m = cell.result.metrics
        table.add_row(
            cell.strategy,
            str(cell.case_id),
            _cell(m.nadir_hz, ".4f"),
            _cell(m.rocof_hz_per_s, ".4f"),
            _cell(m.recovery_time_s, ".2f"),
            f"{m.max_ev_mw:.1f}/{m.max_dc_mw:.1f}/{m.max_bess_mw:.1f}",
            _cell(m.ffr_energy_mwh, ".4f"),
            "[green]ok[/green]",
        )

    console.print(table)
