"""SVG figures for single runs and for the strategy × case matrix."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from ffrsim.core.scenario.batch import MATRIX_STRATEGIES
from ffrsim.core.scenario.cases import CASE_TITLES
from ffrsim.core.scenario.models import CASE_IDS
from ffrsim.reporting.svg import Bar, LineSeries, Panel, render_figure

if TYPE_CHECKING:
    from collections.abc import Sequence

    from ffrsim.core.coordination.models import StrategyKind
    from ffrsim.core.scenario.batch import BatchCell
    from ffrsim.core.scenario.models import RunResult, TimeSeries

logger = logging.getLogger(__name__)

STRATEGY_LABELS: dict[str, str] = {
    "bess_dominant": "BESS-dominant",
    "dc_dominant": "DC-dominant",
    "ev_dominant": "EV-dominant",
    "adaptive": "Adaptive",
    "custom": "Custom",
}

_EV_COLOR = "#1f77b4"
_DC_COLOR = "#ff7f0e"
_BESS_COLOR = "#2ca02c"
_TOTAL_COLOR = "#d62728"
_BASE_COLOR = "#7f7f7f"

_CASE_COLORS: dict[int, str] = {
    1: _BASE_COLOR,
    2: _EV_COLOR,
    3: _DC_COLOR,
    4: _TOTAL_COLOR,
}


def _frequency(series: TimeSeries, label: str, color: str | None = None) -> LineSeries:
    return LineSeries(label, series.t.tolist(), series.f.tolist(), color)


def _power_series(series: TimeSeries) -> list[LineSeries]:
    t = series.t.tolist()
    return [
        LineSeries("EV", t, series.p_ev.tolist(), _EV_COLOR),
        LineSeries("Data center", t, series.p_dc.tolist(), _DC_COLOR),
        LineSeries("BESS", t, series.p_bess.tolist(), _BESS_COLOR),
        LineSeries("Total", t, series.p_ffr_total.tolist(), _TOTAL_COLOR),
    ]


def _weight_series(series: TimeSeries) -> list[LineSeries]:
    t = series.t.tolist()
    return [
        LineSeries("α EV", t, series.alpha_ev.tolist(), _EV_COLOR),
        LineSeries("α DC", t, series.alpha_dc.tolist(), _DC_COLOR),
        LineSeries("α BESS", t, series.alpha_bess.tolist(), _BESS_COLOR),
    ]


def render_run_plots(result: RunResult) -> dict[str, str]:
    """SVG documents for one run, keyed by file name.

    The weights figure is omitted when the run did not log its weights.
    """
    series = result.series
    label = result.scenario.label
    figures = {
        "frequency.svg": render_figure(
            [
                Panel(
                    "System frequency",
                    "Time (s)",
                    "Frequency (Hz)",
                    series=[_frequency(series, label, _EV_COLOR)],
                )
            ],
            title=label,
        ),
        "power.svg": render_figure(
            [Panel("FFR power", "Time (s)", "Power (MW)", series=_power_series(series))],
            title=label,
        ),
    }
    if result.weights_logged:
        figures["weights.svg"] = render_figure(
            [Panel("Participation weights", "Time (s)", "α", series=_weight_series(series))],
            title=label,
        )
    return figures


def _index(cells: Sequence[BatchCell]) -> dict[tuple[StrategyKind, int], RunResult]:
    return {
        (cell.strategy, cell.case_id): cell.result for cell in cells if cell.result is not None
    }


def _frequency_figure(runs: dict[tuple[StrategyKind, int], RunResult]) -> str:
    panels: list[Panel] = []
    for strategy in MATRIX_STRATEGIES:
        panel = Panel(STRATEGY_LABELS[strategy], "Time (s)", "Frequency (Hz)")
        for case_id in CASE_IDS:
            run = runs.get((strategy, case_id))
            if run is not None:
                label = f"Case {case_id}"
                panel.series.append(_frequency(run.series, label, _CASE_COLORS[case_id]))
        panels.append(panel)
    return render_figure(panels, title="Frequency response by coordination strategy")


def _power_figure(runs: dict[tuple[StrategyKind, int], RunResult]) -> str:
    panels: list[Panel] = []
    for strategy in MATRIX_STRATEGIES:
        run = runs.get((strategy, 4))
        series = _power_series(run.series) if run is not None else []
        panels.append(Panel(STRATEGY_LABELS[strategy], "Time (s)", "Power (MW)", series=series))
    return render_figure(panels, title="FFR power contributions, Case 4")


def _weights_figure(runs: dict[tuple[StrategyKind, int], RunResult]) -> str:
    panels: list[Panel] = []
    for strategy in MATRIX_STRATEGIES:
        run = runs.get((strategy, 4))
        series = _weight_series(run.series) if run is not None and run.weights_logged else []
        kind = "stacked" if strategy == "adaptive" else "line"
        panels.append(Panel(STRATEGY_LABELS[strategy], "Time (s)", "α", kind, series))
    return render_figure(panels, title="Participation weights, Case 4")


def _metrics_figure(runs: dict[tuple[StrategyKind, int], RunResult]) -> str:
    nadir: list[Bar] = []
    rocof: list[Bar] = []
    recovery: list[Bar] = []
    energy: list[Bar] = []
    for case_id in CASE_IDS:
        run = runs.get(("adaptive", case_id))
        if run is None:
            continue
        m = run.metrics
        label = f"Case {case_id}"
        nadir.append(Bar(label, m.nadir_hz))
        rocof.append(Bar(label, abs(m.rocof_hz_per_s)))
        if m.recovery_time_s is None:
            logger.warning("%s did not recover; recovery bar omitted", CASE_TITLES[case_id])
        else:
            recovery.append(Bar(label, m.recovery_time_s))
        energy.append(Bar(label, m.ffr_energy_mwh))
    panels = [
        Panel("Frequency nadir", ylabel="Hz", kind="bar", bars=nadir),
        Panel("|RoCoF|", ylabel="Hz/s", kind="bar", bars=rocof),
        Panel("Recovery time", ylabel="s", kind="bar", bars=recovery),
        Panel("FFR energy", ylabel="MWh", kind="bar", bars=energy),
    ]
    return render_figure(panels, title="Frequency performance by case (adaptive)")


def render_plots(cells: Sequence[BatchCell]) -> dict[str, str]:
    """Comparison figures of a batch run, keyed ``fig5.svg`` … ``fig8.svg``.

    Missing (failed) cells leave their panel empty instead of failing.
    """
    runs = _index(cells)
    return {
        "fig5.svg": _frequency_figure(runs),
        "fig6.svg": _power_figure(runs),
        "fig7.svg": _weights_figure(runs),
        "fig8.svg": _metrics_figure(runs),
    }
