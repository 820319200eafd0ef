"""Per-run output bundle: series CSV, metrics JSON, manifest and plots."""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from ffrsim import __version__
from ffrsim.reporting.plots import render_run_plots
from ffrsim.reporting.writers import (
    atomic_write_text,
    write_json,
    write_metrics_json,
    write_timeseries_csv,
)

if TYPE_CHECKING:
    from pathlib import Path

    from ffrsim.core.scenario.models import RunResult
    from ffrsim.sdk.models import ConfigDocument

logger = logging.getLogger(__name__)

TIMESERIES_FILE = "timeseries.csv"
METRICS_FILE = "metrics.json"
MANIFEST_FILE = "manifest.json"


@dataclass(frozen=True, slots=True)
class OutputBundle:
    """Files written for one run."""

    directory: Path
    timeseries: Path
    metrics: Path
    manifest: Path
    plots: tuple[Path, ...] = field(default=())

    @property
    def files(self) -> tuple[Path, ...]:
        return (self.timeseries, self.metrics, *self.plots, self.manifest)


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def build_manifest(
    result: RunResult,
    config: ConfigDocument,
    files: dict[str, str],
    *,
    config_file: Path | None = None,
    raw_hash: str | None = None,
) -> dict[str, Any]:
    """Manifest document; deterministic for identical inputs (no timestamps)."""
    return {
        "tool": "ffrsim",
        "version": __version__,
        "case": result.scenario.case_id,
        "strategy": result.scenario.strategy.kind,
        "config_sha256": config.config_hash(),
        "config_file": str(config_file) if config_file is not None else None,
        "config_file_sha256": raw_hash,
        "files": files,
        "config": config.model_dump(mode="json"),
    }


def write_run_bundle(
    result: RunResult,
    out_dir: Path,
    config: ConfigDocument,
    *,
    plots: bool = True,
    config_file: Path | None = None,
    raw_hash: str | None = None,
) -> OutputBundle:
    """Write *result* into *out_dir*.

    The manifest is written last and lists the SHA-256 of every other file.

    Raises:
        OutputWriteError: If any file cannot be written.
    """
    timeseries = write_timeseries_csv(result.series, out_dir / TIMESERIES_FILE)
    metrics = write_metrics_json(result.metrics, out_dir / METRICS_FILE)

    svgs: list[Path] = []
    if plots:
        for name, text in render_run_plots(result).items():
            svgs.append(atomic_write_text(out_dir / name, text))
    else:
        logger.warning("Plots skipped for %s (--no-plots)", result.scenario.label)

    written = [timeseries, metrics, *svgs]
    files = {path.name: _sha256(path) for path in written}
    manifest = write_json(
        build_manifest(result, config, files, config_file=config_file, raw_hash=raw_hash),
        out_dir / MANIFEST_FILE,
    )
    logger.info("Wrote %d files to %s", len(written) + 1, out_dir)
    return OutputBundle(
        directory=out_dir,
        timeseries=timeseries,
        metrics=metrics,
        manifest=manifest,
        plots=tuple(svgs),
    )
