"""Output writers: CSV series, JSON metrics, manifests and SVG figures."""

from ffrsim.reporting.bundle import OutputBundle, build_manifest, write_run_bundle
from ffrsim.reporting.errors import OutputWriteError, ReportingError
from ffrsim.reporting.plots import render_plots, render_run_plots
from ffrsim.reporting.svg import Bar, LineSeries, Panel, render_figure
from ffrsim.reporting.writers import (
    SUMMARY_COLUMNS,
    atomic_write_text,
    write_metrics_json,
    write_summary_csv,
    write_timeseries_csv,
)

__all__ = [
    "SUMMARY_COLUMNS",
    "Bar",
    "LineSeries",
    "OutputBundle",
    "OutputWriteError",
    "Panel",
    "ReportingError",
    "atomic_write_text",
    "build_manifest",
    "render_figure",
    "render_plots",
    "render_run_plots",
    "write_metrics_json",
    "write_run_bundle",
    "write_summary_csv",
    "write_timeseries_csv",
]
