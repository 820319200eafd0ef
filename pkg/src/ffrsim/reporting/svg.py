"""Minimal SVG figure builder.

A figure is a grid of panels.  Each panel draws line series, a stacked
area, or a bar chart with axis ranges taken from the data extents.  The
output is plain SVG text, deterministic for identical input.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Literal
from xml.sax.saxutils import escape

PALETTE: tuple[str, ...] = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
)

PANEL_WIDTH = 460
PANEL_HEIGHT = 300
_MARGIN_LEFT = 64
_MARGIN_RIGHT = 16
_MARGIN_TOP = 34
_MARGIN_BOTTOM = 44
_TITLE_HEIGHT = 36
_TICKS = 5


@dataclass(frozen=True, slots=True)
class LineSeries:
    label: str
    x: Sequence[float]
    y: Sequence[float]
    color: str | None = None


@dataclass(frozen=True, slots=True)
class Bar:
    label: str
    value: float
    color: str | None = None


@dataclass(slots=True)
class Panel:
    """One subplot."""

    title: str
    xlabel: str = ""
    ylabel: str = ""
    kind: Literal["line", "stacked", "bar"] = "line"
    series: list[LineSeries] = field(default_factory=list[LineSeries])
    bars: list[Bar] = field(default_factory=list[Bar])


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _tick(value: float) -> str:
    text = f"{value:.4g}"
    return "0" if text == "-0" else text


def _extent(values: Sequence[float]) -> tuple[float, float]:
    finite = [v for v in values if v == v]
    if not finite:
        return (0.0, 1.0)
    lo, hi = min(finite), max(finite)
    if hi - lo < 1e-12:
        pad = max(abs(lo) * 0.01, 0.5)
        return (lo - pad, hi + pad)
    pad = (hi - lo) * 0.05
    return (lo - pad, hi + pad)


class _Axes:
    """Maps data coordinates into one panel's plotting box."""

    def __init__(
        self, left: float, top: float, x_range: tuple[float, float], y_range: tuple[float, float]
    ) -> None:
        self.x0 = left + _MARGIN_LEFT
        self.y0 = top + _MARGIN_TOP
        self.width = PANEL_WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
        self.height = PANEL_HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM
        self.x_range = x_range
        self.y_range = y_range

    def px(self, x: float) -> float:
        lo, hi = self.x_range
        return self.x0 + (x - lo) / (hi - lo) * self.width

    def py(self, y: float) -> float:
        lo, hi = self.y_range
        return self.y0 + self.height - (y - lo) / (hi - lo) * self.height

    def frame(self, parts: list[str], xlabel: str, ylabel: str, *, x_ticks: bool = True) -> None:
        parts.append(
            f'<rect x="{_fmt(self.x0)}" y="{_fmt(self.y0)}" width="{_fmt(self.width)}" '
            f'height="{_fmt(self.height)}" fill="none" stroke="#444" stroke-width="1"/>'
        )
        for i in range(_TICKS + 1):
            frac = i / _TICKS
            yv = self.y_range[0] + frac * (self.y_range[1] - self.y_range[0])
            y = self.py(yv)
            parts.append(
                f'<line x1="{_fmt(self.x0)}" y1="{_fmt(y)}" x2="{_fmt(self.x0 + self.width)}" '
                f'y2="{_fmt(y)}" stroke="#ddd" stroke-width="0.5"/>'
            )
            parts.append(
                f'<text x="{_fmt(self.x0 - 6)}" y="{_fmt(y + 4)}" font-size="10" '
                f'text-anchor="end">{_tick(yv)}</text>'
            )
            if x_ticks:
                xv = self.x_range[0] + frac * (self.x_range[1] - self.x_range[0])
                x = self.px(xv)
                parts.append(
                    f'<text x="{_fmt(x)}" y="{_fmt(self.y0 + self.height + 14)}" '
                    f'font-size="10" text-anchor="middle">{_tick(xv)}</text>'
                )
        if xlabel:
            parts.append(
                f'<text x="{_fmt(self.x0 + self.width / 2)}" '
                f'y="{_fmt(self.y0 + self.height + 32)}" font-size="11" '
                f'text-anchor="middle">{escape(xlabel)}</text>'
            )
        if ylabel:
            cx, cy = self.x0 - 48, self.y0 + self.height / 2
            parts.append(
                f'<text x="{_fmt(cx)}" y="{_fmt(cy)}" font-size="11" text-anchor="middle" '
                f'transform="rotate(-90 {_fmt(cx)} {_fmt(cy)})">{escape(ylabel)}</text>'
            )


def _legend(parts: list[str], axes: _Axes, labels: list[tuple[str, str]]) -> None:
    for i, (label, color) in enumerate(labels):
        x = axes.x0 + 8
        y = axes.y0 + 12 + i * 13
        parts.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y - 7)}" width="10" height="3" fill="{color}"/>'
        )
        parts.append(
            f'<text x="{_fmt(x + 14)}" y="{_fmt(y - 3)}" font-size="10">{escape(label)}</text>'
        )


def _color(index: int, explicit: str | None) -> str:
    return explicit or PALETTE[index % len(PALETTE)]


def _points(axes: _Axes, xs: Sequence[float], ys: Sequence[float]) -> str:
    return " ".join(
        f"{_fmt(axes.px(x))},{_fmt(axes.py(y))}" for x, y in zip(xs, ys, strict=True) if y == y
    )


def _render_lines(parts: list[str], panel: Panel, left: float, top: float) -> None:
    xs = [x for s in panel.series for x in s.x]
    ys = [y for s in panel.series for y in s.y]
    axes = _Axes(left, top, _extent(xs), _extent(ys))
    axes.frame(parts, panel.xlabel, panel.ylabel)
    legend: list[tuple[str, str]] = []
    for i, s in enumerate(panel.series):
        color = _color(i, s.color)
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.4" '
            f'points="{_points(axes, s.x, s.y)}"/>'
        )
        legend.append((s.label, color))
    _legend(parts, axes, legend)


def _render_stacked(parts: list[str], panel: Panel, left: float, top: float) -> None:
    if not panel.series:
        return
    xs = list(panel.series[0].x)
    base = [0.0] * len(xs)
    layers: list[tuple[list[float], list[float]]] = []
    for s in panel.series:
        upper = [b + (y if y == y else 0.0) for b, y in zip(base, s.y, strict=True)]
        layers.append((base, upper))
        base = upper
    top_value = max([1.0, *base])
    axes = _Axes(left, top, _extent(xs), (0.0, top_value))
    axes.frame(parts, panel.xlabel, panel.ylabel)
    legend: list[tuple[str, str]] = []
    for i, (s, (lower, upper)) in enumerate(zip(panel.series, layers, strict=True)):
        color = _color(i, s.color)
        outline = _points(axes, xs, upper) + " " + _points(axes, xs[::-1], lower[::-1])
        parts.append(
            f'<polygon fill="{color}" fill-opacity="0.55" stroke="none" points="{outline}"/>'
        )
        legend.append((s.label, color))
    _legend(parts, axes, legend)


def _render_bars(parts: list[str], panel: Panel, left: float, top: float) -> None:
    values = [b.value for b in panel.bars]
    axes = _Axes(left, top, (0.0, float(max(len(values), 1))), _extent([0.0, *values]))
    axes.frame(parts, panel.xlabel, panel.ylabel, x_ticks=False)
    zero = axes.py(0.0)
    for i, bar in enumerate(panel.bars):
        x = axes.px(i + 0.2)
        width = axes.px(i + 0.8) - x
        y = axes.py(bar.value)
        parts.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(min(y, zero))}" width="{_fmt(width)}" '
            f'height="{_fmt(abs(zero - y))}" fill="{_color(i, bar.color)}"/>'
        )
        parts.append(
            f'<text x="{_fmt(x + width / 2)}" y="{_fmt(axes.y0 + axes.height + 14)}" '
            f'font-size="10" text-anchor="middle">{escape(bar.label)}</text>'
        )
        parts.append(
            f'<text x="{_fmt(x + width / 2)}" y="{_fmt(min(y, zero) - 3)}" font-size="9" '
            f'text-anchor="middle">{_tick(bar.value)}</text>'
        )


def render_figure(panels: Sequence[Panel], *, title: str = "", columns: int = 2) -> str:
    """Lay *panels* out on a grid of *columns* and return the SVG document."""
    columns = max(1, min(columns, len(panels) or 1))
    rows = max(1, -(-len(panels) // columns))
    width = columns * PANEL_WIDTH
    height = rows * PANEL_HEIGHT + _TITLE_HEIGHT
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{width / 2:.2f}" y="22" font-size="15" font-weight="bold" '
            f'text-anchor="middle">{escape(title)}</text>'
        )
    for index, panel in enumerate(panels):
        left = (index % columns) * PANEL_WIDTH
        top = _TITLE_HEIGHT + (index // columns) * PANEL_HEIGHT
        parts.append(
            f'<text x="{left + PANEL_WIDTH / 2:.2f}" y="{top + 20:.2f}" font-size="12" '
            f'text-anchor="middle">{escape(panel.title)}</text>'
        )
        if panel.kind == "bar":
            _render_bars(parts, panel, left, top)
        elif panel.kind == "stacked":
            _render_stacked(parts, panel, left, top)
        else:
            _render_lines(parts, panel, left, top)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
