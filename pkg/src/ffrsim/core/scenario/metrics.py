"""Frequency-performance metrics of a sampled run.

* nadir: minimum frequency.
* RoCoF: most negative slope of a sliding least-squares line fit
  (``rocof_window`` long) over ``[t_dist, t_dist + rocof_span]``.
* recovery: first ``τ - t_dist`` such that ``|f - f_qss| <= recovery_band``
  for every sample in ``[τ, τ + recovery_hold]``; ``f_qss`` is the mean of the
  last ``qss_window`` seconds.  ``None`` if never recovered.
* FFR energy: trapezoidal integral of the positive part of the total FFR
  power, in MWh.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ffrsim.core.errors import MetricsError
from ffrsim.core.scenario.models import MetricsRecord, MetricsSettings
from ffrsim.utils.telemetry import (
    ATTR_FFR_ENERGY,
    ATTR_NADIR,
    ATTR_RECOVERY,
    ATTR_ROCOF,
    ATTR_SAMPLES,
    get_tracer,
)

if TYPE_CHECKING:
    from ffrsim.core.scenario.models import FloatArray, TimeSeries

_tracer = get_tracer(__name__)

# Tolerance when matching sample times against window edges.
_TIME_EPS = 1e-9


def _sample_period(t: FloatArray) -> float:
    if t.shape[0] < 2:
        raise MetricsError(f"need at least 2 samples, got {t.shape[0]}")
    steps = np.diff(t)
    if np.any(steps <= 0):
        raise MetricsError("sample times must be strictly increasing")
    return float(steps[0])


def _window_points(length: float, period: float) -> int:
    return round(length / period) + 1


def windowed_rocof(
    t: FloatArray, f: FloatArray, start: float, span: float, window: float
) -> float:
    """Most negative slope (Hz/s) of *window*-long line fits within ``[start, start + span]``."""
    period = _sample_period(t)
    inside = (t >= start - _TIME_EPS) & (t <= start + span + _TIME_EPS)
    ts, fs = t[inside], f[inside]
    points = _window_points(window, period)
    if ts.shape[0] < points:
        raise MetricsError(
            f"RoCoF window of {window}s needs {points} samples after t={start}, got {ts.shape[0]}"
        )
    tw = sliding_window_view(ts, points)
    fw = sliding_window_view(fs, points)
    tc = tw - tw.mean(axis=1, keepdims=True)
    fc = fw - fw.mean(axis=1, keepdims=True)
    slopes = (tc * fc).sum(axis=1) / (tc * tc).sum(axis=1)
    return float(slopes.min()) + 0.0


def recovery_time(
    t: FloatArray,
    f: FloatArray,
    start: float,
    band: float,
    hold: float,
    qss_window: float,
) -> float | None:
    """Seconds from *start* until *f* settles within *band* of its final mean for *hold* seconds."""
    period = _sample_period(t)
    tail = t >= t[-1] - qss_window - _TIME_EPS
    if np.count_nonzero(tail) < 2:
        raise MetricsError(f"series too short for a {qss_window}s quasi-steady-state window")
    f_qss = float(f[tail].mean())

    points = _window_points(hold, period)
    if t.shape[0] < points:
        raise MetricsError(f"series too short for a {hold}s recovery hold")
    within = np.abs(f - f_qss) <= band
    held = sliding_window_view(within, points).all(axis=1)
    candidates = np.flatnonzero(held & (t[: held.shape[0]] >= start - _TIME_EPS))
    if candidates.shape[0] == 0:
        return None
    return max(0.0, float(t[candidates[0]]) - start)


def ffr_energy(t: FloatArray, p_total: FloatArray) -> float:
    """Positive-part trapezoidal energy of *p_total* (MW over s) in MWh."""
    return float(np.trapezoid(np.maximum(p_total, 0.0), t)) / 3600.0


def compute_metrics(
    series: TimeSeries,
    f0: float,
    dist_time: float,
    settings: MetricsSettings | None = None,
) -> MetricsRecord:
    """Compute the :class:`MetricsRecord` of *series* for a disturbance at *dist_time*.

    Raises:
        MetricsError: If the series does not cover the configured windows.
    """
    settings = settings or MetricsSettings()
    t, f = series.t, series.f
    if len(series) == 0:
        raise MetricsError("empty time series")
    if t[-1] + _TIME_EPS < dist_time + settings.rocof_window:
        raise MetricsError(
            f"series ends at t={t[-1]:.3f}s, before the RoCoF window after t={dist_time}s"
        )

    with _tracer.start_as_current_span("scenario.metrics") as span:
        span.set_attribute(ATTR_SAMPLES, len(series))
        record = MetricsRecord(
            nadir_hz=float(f.min()),
            rocof_hz_per_s=windowed_rocof(
                t, f, dist_time, settings.rocof_span, settings.rocof_window
            ),
            recovery_time_s=recovery_time(
                t,
                f,
                dist_time,
                settings.recovery_band,
                settings.recovery_hold,
                settings.qss_window,
            ),
            max_ev_mw=float(series.p_ev.max()),
            max_dc_mw=float(series.p_dc.max()),
            max_bess_mw=float(series.p_bess.max()),
            ffr_energy_mwh=ffr_energy(t, series.p_ffr_total),
        )
        span.set_attribute(ATTR_NADIR, record.nadir_hz)
        span.set_attribute(ATTR_ROCOF, record.rocof_hz_per_s)
        span.set_attribute(ATTR_FFR_ENERGY, record.ffr_energy_mwh)
        if record.recovery_time_s is not None:
            span.set_attribute(ATTR_RECOVERY, record.recovery_time_s)
    return record
