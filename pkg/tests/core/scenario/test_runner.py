"""Tests for the simulation loop on default and short scenarios."""

import numpy as np
import pytest

from ffrsim.core.coordination.allocation import weights_trace
from ffrsim.core.errors import MetricsError
from ffrsim.core.scenario.cases import build_case
from ffrsim.core.scenario.models import RunResult, ScenarioConfig
from ffrsim.core.scenario.runner import build_fleet, run_scenario

# Start of the post-disturbance window used by the weight checks.
_SETTLE = 1.0


def _with(config: ScenarioConfig, **sections: dict[str, object]) -> ScenarioConfig:
    data = config.model_dump(mode="json")
    for name, values in sections.items():
        data[name].update(values)
    return ScenarioConfig.model_validate(data)


class TestDefaultCases:
    def test_case_one_has_no_ffr(self, case_runs: dict[int, RunResult]) -> None:
        run = case_runs[1]
        assert run.metrics.ffr_energy_mwh == 0.0
        assert np.all(run.series.p_ffr_total == 0.0)

    def test_case_one_rocof(self, case_runs: dict[int, RunResult]) -> None:
        assert case_runs[1].metrics.rocof_hz_per_s == pytest.approx(-0.58, abs=0.03)

    def test_case_one_declines_after_event(self, case_runs: dict[int, RunResult]) -> None:
        s = case_runs[1].series
        window = (s.t >= 5.0 - 1e-9) & (s.t <= 5.5 + 1e-9)
        assert np.all(np.diff(s.f[window]) < 0)

    def test_case_two_uses_only_ev(self, case_runs: dict[int, RunResult]) -> None:
        s = case_runs[2].series
        assert s.p_ev.max() > 0
        assert np.all(s.p_ups == 0.0)
        assert np.all(s.p_it == 0.0)
        assert np.all(s.p_bess == 0.0)

    def test_case_four_uses_every_resource(self, case_runs: dict[int, RunResult]) -> None:
        m = case_runs[4].metrics
        assert m.max_ev_mw > 0
        assert m.max_dc_mw > 0
        assert m.max_bess_mw > 0

    def test_coordination_raises_nadir(self, case_runs: dict[int, RunResult]) -> None:
        assert case_runs[4].metrics.nadir_hz > case_runs[1].metrics.nadir_hz

    def test_weights_sum_to_one(self, case_runs: dict[int, RunResult]) -> None:
        trace = weights_trace(case_runs[4])
        assert np.allclose(trace.stacked().sum(axis=1), 1.0, atol=1e-9)

    def test_bess_leads_at_disturbance(self, case_runs: dict[int, RunResult]) -> None:
        s = case_runs[4].series
        i = int(np.searchsorted(s.t, 5.0 - 1e-9))
        assert s.alpha_bess[i] > s.alpha_ev[i]
        assert s.alpha_bess[i] > s.alpha_dc[i]

    def test_weight_trends_after_event(self, case_runs: dict[int, RunResult]) -> None:
        s = case_runs[4].series
        window = (s.t >= 5.0 + _SETTLE) & (s.t <= 15.0)
        alpha_bess, alpha_ev = s.alpha_bess[window], s.alpha_ev[window]
        assert np.all(np.diff(alpha_bess) <= 1e-6)
        assert np.all(np.diff(alpha_ev) >= -1e-6)
        assert alpha_bess[0] - alpha_bess[-1] > 0.02
        assert alpha_ev[-1] - alpha_ev[0] > 0.01

    def test_bess_weight_peaks_at_disturbance(self, case_runs: dict[int, RunResult]) -> None:
        s = case_runs[4].series
        i = int(np.searchsorted(s.t, 5.0 - 1e-9))
        assert s.alpha_bess[i] == pytest.approx(s.alpha_bess.max(), abs=1e-12)

    def test_soc_matches_delivered_energy(self, case_runs: dict[int, RunResult]) -> None:
        run = case_runs[4]
        s = run.series
        fleet = build_fleet(run.scenario)
        for power, soc, energy_mwh in (
            (s.p_bess, s.soc_bess, fleet.bess.energy_e_bess),
            (s.p_ev, s.soc_ev, fleet.ev.energy_e_ev),
        ):
            delivered = float(np.trapezoid(power, s.t))
            drawn = (soc[0] - soc[-1]) * energy_mwh * 3600.0
            assert delivered > 0.0
            assert drawn == pytest.approx(delivered, rel=1e-3)

    def test_soc_never_below_floor(self, case_runs: dict[int, RunResult]) -> None:
        s = case_runs[4].series
        assert s.soc_ev.min() >= 0.2
        assert s.soc_bess.min() >= 0.1


class TestCaseProgression:
    def test_strict_ordering(self, case_runs: dict[int, RunResult]) -> None:
        m = [case_runs[c].metrics for c in (1, 2, 3, 4)]
        nadirs = [r.nadir_hz for r in m]
        rocofs = [abs(r.rocof_hz_per_s) for r in m]
        recoveries: list[float] = []
        for r in m:
            assert r.recovery_time_s is not None
            recoveries.append(r.recovery_time_s)
        assert nadirs == sorted(nadirs)
        assert len(set(nadirs)) == 4
        assert rocofs == sorted(rocofs, reverse=True)
        assert len(set(rocofs)) == 4
        assert recoveries == sorted(recoveries, reverse=True)
        assert len(set(recoveries)) == 4

    def test_nadir_gain(self, case_runs: dict[int, RunResult]) -> None:
        gain = case_runs[4].metrics.nadir_hz - case_runs[1].metrics.nadir_hz
        assert 0.15 <= gain <= 0.35

    def test_rocof_reduction(self, case_runs: dict[int, RunResult]) -> None:
        base = abs(case_runs[1].metrics.rocof_hz_per_s)
        coordinated = abs(case_runs[4].metrics.rocof_hz_per_s)
        assert 0.30 <= 1.0 - coordinated / base <= 0.60

    def test_ffr_energy(self, case_runs: dict[int, RunResult]) -> None:
        energy = [case_runs[c].metrics.ffr_energy_mwh for c in (2, 3, 4)]
        assert 0.2 <= energy[2] <= 0.8
        assert energy[2] >= energy[1] >= energy[0] > 0.0


class TestRunScenario:
    def test_deterministic(self, short_config: ScenarioConfig) -> None:
        a = run_scenario(build_case(4, short_config))
        b = run_scenario(build_case(4, short_config))
        for x, y in zip(a.series.columns(), b.series.columns(), strict=True):
            assert np.array_equal(x, y)

    def test_halved_step_converges(
        self, default_config: ScenarioConfig, case_runs: dict[int, RunResult]
    ) -> None:
        coarse = case_runs[4]
        fine = run_scenario(build_case(4, _with(default_config, solver={"dt": 0.0005})))
        assert np.allclose(fine.series.t, coarse.series.t, rtol=0.0, atol=1e-9)
        assert np.max(np.abs(fine.series.f - coarse.series.f)) < 1e-6
        a, b = coarse.metrics, fine.metrics
        assert a.recovery_time_s is not None
        assert b.recovery_time_s is not None
        for x, y in (
            (a.nadir_hz, b.nadir_hz),
            (a.rocof_hz_per_s, b.rocof_hz_per_s),
            (a.recovery_time_s, b.recovery_time_s),
            (a.ffr_energy_mwh, b.ffr_energy_mwh),
        ):
            assert y == pytest.approx(x, rel=1e-4)

    def test_samples_cover_horizon(self, short_config: ScenarioConfig) -> None:
        run = run_scenario(build_case(1, short_config))
        assert len(run.series) == 801
        assert run.series.t[0] == 0.0
        assert run.series.t[-1] == pytest.approx(8.0)
        assert run.steps == 4000

    def test_no_disturbance_is_flat(self, short_config: ScenarioConfig) -> None:
        config = _with(short_config, disturbance={"enabled": False})
        run = run_scenario(build_case(4, config))
        assert np.all(run.series.f == 60.0)
        assert run.metrics.ffr_energy_mwh == 0.0

    def test_zero_loss_matches_undisturbed(self, short_config: ScenarioConfig) -> None:
        config = _with(short_config, disturbance={"power_mw": 0.0, "trip_generator": None})
        run = run_scenario(build_case(4, config))
        assert np.all(run.series.f == 60.0)

    def test_fixed_trace_is_constant(self, short_config: ScenarioConfig) -> None:
        run = run_scenario(build_case(4, short_config, "bess_dominant"))
        trace = weights_trace(run)
        assert trace.is_constant()
        assert tuple(trace.stacked()[0]) == (0.2, 0.2, 0.6)

    def test_unlogged_weights(self, short_config: ScenarioConfig) -> None:
        config = _with(short_config, strategy={"log_weights": False})
        run = run_scenario(build_case(4, config))
        assert np.all(np.isnan(run.series.alpha_ev))
        with pytest.raises(MetricsError):
            weights_trace(run)

    def test_null_allocation_reproduces_case_one(self, short_config: ScenarioConfig) -> None:
        config = _with(short_config, strategy={"kind": "custom", "fixed_weights": [1.0, 0.0, 0.0]})
        config = _with(config, resources={"ev": {"soc_initial": 0.2}})
        baseline = run_scenario(build_case(1, short_config))
        nulled = run_scenario(build_case(4, config))
        assert np.array_equal(baseline.series.f, nulled.series.f)


class TestBuildFleet:
    def test_gain_scale_applied(self, default_config: ScenarioConfig) -> None:
        fleet = build_fleet(build_case(4, default_config))
        assert fleet.ev.droop_gain_k_ev == pytest.approx(25.0 * 155.0)
        assert fleet.bess.droop_gain_k_b == pytest.approx(40.0 * 155.0)
