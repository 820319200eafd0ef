"""Atomic CSV/JSON/text writers.

Every file is written to a temporary sibling and moved into place with
:func:`os.replace`, so an interrupted run never leaves a truncated file.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path
from typing import TYPE_CHECKING, Any

from ffrsim.core.scenario.models import SERIES_COLUMNS
from ffrsim.reporting.errors import OutputWriteError

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from ffrsim.core.scenario.batch import BatchCell
    from ffrsim.core.scenario.models import MetricsRecord, TimeSeries

SUMMARY_COLUMNS: tuple[str, ...] = (
    "strategy",
    "case",
    "nadir_hz",
    "rocof_hz_per_s",
    "recovery_time_s",
    "max_ev_mw",
    "max_dc_mw",
    "max_bess_mw",
    "ffr_energy_mwh",
    "status",
)


def format_number(value: float | None) -> str:
    """Nine significant digits; ``None`` becomes an empty field."""
    if value is None:
        return ""
    return format(float(value), ".9g")


def atomic_write_text(path: Path, text: str) -> Path:
    """Write *text* (UTF-8, ``\\n`` newlines) to *path* atomically.

    Raises:
        OutputWriteError: If the directory or file cannot be written.
    """
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    except OSError as exc:
        raise OutputWriteError(path, str(exc)) from exc
    tmp = Path(tmp_name)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        tmp.replace(path)
    except OSError as exc:
        tmp.unlink(missing_ok=True)
        raise OutputWriteError(path, str(exc)) from exc
    return path


def _csv_text(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def write_timeseries_csv(series: TimeSeries, path: Path) -> Path:
    """Write *series* with the fixed column order of :data:`SERIES_COLUMNS`."""
    columns = [col.tolist() for col in series.columns()]
    rows = ([format_number(v) for v in row] for row in zip(*columns, strict=True))
    return atomic_write_text(path, _csv_text(SERIES_COLUMNS, rows))


def write_json(data: Any, path: Path) -> Path:
    return atomic_write_text(path, json.dumps(data, indent=2, allow_nan=False) + "\n")


def write_metrics_json(metrics: MetricsRecord, path: Path) -> Path:
    return write_json(metrics.to_json_dict(), path)


def write_summary_csv(cells: Sequence[BatchCell], path: Path) -> Path:
    """One row per cell; failed cells keep empty metric fields and ``status=failed``."""
    rows: list[list[str]] = []
    for cell in cells:
        if cell.result is None:
            rows.append([cell.strategy, str(cell.case_id), *([""] * 7), "failed"])
            continue
        m = cell.result.metrics
        rows.append(
            [
                cell.strategy,
                str(cell.case_id),
                format_number(m.nadir_hz),
                format_number(m.rocof_hz_per_s),
                format_number(m.recovery_time_s),
                format_number(m.max_ev_mw),
                format_number(m.max_dc_mw),
                format_number(m.max_bess_mw),
                format_number(m.ffr_energy_mwh),
                "ok",
            ]
        )
    return atomic_write_text(path, _csv_text(SUMMARY_COLUMNS, rows))
