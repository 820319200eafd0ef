"""Tests for the SVG figure builder and plots."""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET

from ffrsim.core.scenario.batch import BatchCell
from ffrsim.core.scenario.cases import build_case
from ffrsim.core.scenario.models import ScenarioConfig
from ffrsim.core.scenario.runner import run_scenario
from ffrsim.reporting.plots import render_plots, render_run_plots
from ffrsim.reporting.svg import Bar, LineSeries, Panel, render_figure

_SVG = "{http://www.w3.org/2000/svg}"


def _parse(text: str) -> ET.Element:
    return ET.fromstring(text)


def _polyline_ys(text: str) -> set[str]:
    root = _parse(text)
    ys: set[str] = set()
    for line in root.iter(f"{_SVG}polyline"):
        for point in line.attrib["points"].split():
            ys.add(point.split(",")[1])
    return ys


class TestRenderFigure:
    def test_flat_line_is_horizontal(self) -> None:
        panel = Panel("f", series=[LineSeries("flat", [0.0, 1.0, 2.0], [60.0, 60.0, 60.0])])
        assert len(_polyline_ys(render_figure([panel]))) == 1

    def test_deterministic(self) -> None:
        panel = Panel("b", kind="bar", bars=[Bar("A", 1.0), Bar("B", -2.0)])
        assert render_figure([panel]) == render_figure([panel])

    def test_stacked_layers(self) -> None:
        series = [
            LineSeries("a", [0.0, 1.0], [0.5, 0.5]),
            LineSeries("b", [0.0, 1.0], [0.5, 0.5]),
        ]
        root = _parse(render_figure([Panel("s", kind="stacked", series=series)]))
        assert len(list(root.iter(f"{_SVG}polygon"))) == 2

    def test_title_escaped(self) -> None:
        text = render_figure([Panel("<α & β>")], title="a < b")
        _parse(text)
        assert "&lt;α &amp; β&gt;" in text

    def test_nan_points_skipped(self) -> None:
        panel = Panel("n", series=[LineSeries("n", [0.0, 1.0], [float("nan"), 1.0])])
        text = render_figure([panel])
        assert not re.search(r"nan", text, re.IGNORECASE)


class TestPlots:
    def test_run_plots(self, short_config: ScenarioConfig) -> None:
        config = ScenarioConfig.model_validate(
            {**short_config.model_dump(mode="json"), "disturbance": {"enabled": False}}
        )
        figures = render_run_plots(run_scenario(build_case(4, config)))
        assert set(figures) == {"frequency.svg", "power.svg", "weights.svg"}
        assert len(_polyline_ys(figures["frequency.svg"])) == 1

    def test_batch_figure_names(self, short_config: ScenarioConfig) -> None:
        result = run_scenario(build_case(4, short_config))
        cells = [
            BatchCell(strategy="adaptive", case_id=4, result=result),
            BatchCell(strategy="ev_dominant", case_id=4, error="failed"),
        ]
        figures = render_plots(cells)
        assert sorted(figures) == ["fig5.svg", "fig6.svg", "fig7.svg", "fig8.svg"]
        for text in figures.values():
            _parse(text)

    def test_frequency_and_power_panels(self, short_config: ScenarioConfig) -> None:
        cells = [
            BatchCell(
                strategy="adaptive",
                case_id=case_id,
                result=run_scenario(build_case(case_id, short_config)),
            )
            for case_id in (1, 2, 3, 4)
        ]
        cells.append(
            BatchCell(
                strategy="ev_dominant",
                case_id=4,
                result=run_scenario(build_case(4, short_config, "ev_dominant")),
            )
        )
        figures = render_plots(cells)
        frequency = _parse(figures["fig5.svg"])
        assert len(list(frequency.iter(f"{_SVG}polyline"))) == 5
        for case_id in (1, 2, 3, 4):
            assert f"Case {case_id}" in figures["fig5.svg"]
        power = _parse(figures["fig6.svg"])
        assert len(list(power.iter(f"{_SVG}polyline"))) == 8
        for label in ("Adaptive", "EV-dominant", "BESS-dominant", "DC-dominant"):
            assert label in figures["fig6.svg"]
