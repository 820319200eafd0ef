"""Tests for frequency-performance metrics on synthetic series."""

import numpy as np
import pytest

from ffrsim.core.errors import MetricsError
from ffrsim.core.scenario.metrics import (
    compute_metrics,
    ffr_energy,
    recovery_time,
    windowed_rocof,
)
from ffrsim.core.scenario.models import SERIES_COLUMNS, FloatArray, MetricsSettings, TimeSeries


def _series(t: FloatArray, f: FloatArray, p_total: FloatArray | None = None) -> TimeSeries:
    zeros = np.zeros_like(t)
    p = zeros if p_total is None else p_total
    columns = [t, f, p, zeros, zeros, zeros, p, zeros, zeros, zeros, zeros, zeros]
    assert len(columns) == len(SERIES_COLUMNS)
    return TimeSeries(*columns)


T = np.round(np.arange(0, 3001) * 0.01, 10)


class TestComputeMetrics:
    def test_flat_series(self) -> None:
        record = compute_metrics(_series(T, np.full_like(T, 60.0)), 60.0, 5.0)
        assert record.nadir_hz == 60.0
        assert record.rocof_hz_per_s == 0.0
        assert record.recovery_time_s == 0.0
        assert record.ffr_energy_mwh == 0.0

    def test_ramp_rocof(self) -> None:
        f = np.where(T < 5.0, 60.0, 60.0 - 0.58 * (T - 5.0))
        rocof = windowed_rocof(T, f, 5.0, 2.0, 0.5)
        assert rocof == pytest.approx(-0.58, abs=1e-9)

    def test_rectangular_energy(self) -> None:
        p = np.where((T >= 5.0) & (T <= 15.0), 144.0, 0.0)
        record = compute_metrics(_series(T, np.full_like(T, 60.0), p), 60.0, 5.0)
        assert record.ffr_energy_mwh == pytest.approx(0.4, rel=2e-3)

    def test_negative_power_not_counted(self) -> None:
        assert ffr_energy(T, np.full_like(T, -10.0)) == 0.0

    def test_json_schema(self) -> None:
        record = compute_metrics(_series(T, np.full_like(T, 60.0)), 60.0, 5.0)
        doc = record.to_json_dict()
        assert set(doc) == {
            "nadir_hz",
            "rocof_hz_per_s",
            "recovery_time_s",
            "max_power_mw",
            "ffr_energy_mwh",
        }
        assert set(doc["max_power_mw"]) == {"ev", "dc", "bess"}

    def test_too_short_series(self) -> None:
        t = T[:520]
        with pytest.raises(MetricsError):
            compute_metrics(_series(t, np.full_like(t, 60.0)), 60.0, 5.0)


class TestRecoveryTime:
    def test_dip_and_settle(self) -> None:
        f = np.full_like(T, 59.8)
        f[(T >= 5.0) & (T < 9.0)] = 59.5
        f[T < 5.0] = 60.0
        assert recovery_time(T, f, 5.0, 0.05, 1.0, 1.0) == pytest.approx(4.0)

    def test_never_recovers(self) -> None:
        f = 60.0 + 0.2 * np.sin(T * 10.0)
        assert recovery_time(T, f, 5.0, 0.05, 1.0, 1.0) is None


class TestMetricsSettings:
    def test_window_cannot_exceed_span(self) -> None:
        with pytest.raises(ValueError, match="rocof_window"):
            MetricsSettings(rocof_window=3.0, rocof_span=2.0)
