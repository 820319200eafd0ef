"""Tests for the aggregate swing equation and disturbances."""

import math
from dataclasses import replace

import pytest

from ffrsim.core.errors import ModelConfigurationError, SystemCollapseError
from ffrsim.core.grid.integrate import State, rk4_step
from ffrsim.core.grid.models import DisturbanceEvent, Generator, GridConfig, GridState
from ffrsim.core.grid.swing import apply_disturbance, coupled_step, kinetic_constant, swing_step


def _tripped_state() -> GridState:
    state = GridState.initial(GridConfig())
    return state.with_generator_offline("G1")


class TestKineticConstant:
    def test_default_fleet_after_trip(self) -> None:
        assert kinetic_constant(_tripped_state()) == pytest.approx(1724.14, rel=1e-4)

    def test_inertia_reduction_applied(self) -> None:
        full = GridState.initial(GridConfig(inertia_reduction=0.0))
        reduced = GridState.initial(GridConfig(inertia_reduction=0.4))
        assert kinetic_constant(reduced) == pytest.approx(0.6 * kinetic_constant(full))


class TestSwingStep:
    def test_equilibrium_is_preserved(self) -> None:
        state = GridState.initial(GridConfig())
        for _ in range(100):
            state = swing_step(state, 0.0, 0.001)
        assert state.freq_dev == 0.0
        assert all(p == 0.0 for p in state.governor_power)
        assert state.time == pytest.approx(0.1)

    def test_initial_rocof_matches_kinetic_constant(self) -> None:
        state = _tripped_state()
        dt = 1e-5
        after = swing_step(state, -1000.0, dt)
        assert after.freq_dev / dt == pytest.approx(-0.58, rel=1e-3)

    def test_governors_oppose_decline(self) -> None:
        state = _tripped_state()
        for _ in range(1000):
            state = swing_step(state, -1000.0, 0.001)
        pairs = zip(state.generators, state.governor_power, strict=True)
        online = [p for g, p in pairs if g.online]
        assert all(p > 0 for p in online)

    def test_governor_output_limited(self) -> None:
        gen = Generator(id="G", rated_power=100.0, governor_limit=0.1, governor_time_const=0.01)
        state = GridState.initial(GridConfig(generators=[gen], damping_d=0.0))
        for _ in range(2000):
            state = swing_step(state, -50.0, 0.001)
        assert state.governor_power[0] <= 10.0 + 1e-9

    def test_rejects_non_positive_dt(self) -> None:
        with pytest.raises(ModelConfigurationError):
            swing_step(GridState.initial(GridConfig()), 0.0, 0.0)

    def test_collapse_when_all_tripped(self) -> None:
        config = GridConfig(generators=[Generator(id="G1", rated_power=100.0)])
        state = GridState.initial(config).with_generator_offline("G1")
        with pytest.raises(SystemCollapseError):
            swing_step(state, -10.0, 0.001)


class TestCoupledStep:
    def test_constant_injection_matches_swing_step(self) -> None:
        state = _tripped_state()

        def injection(_frac: float, _dev: float, _aux: State) -> tuple[float, State]:
            return 200.0, ()

        coupled, aux = coupled_step(state, -1000.0, 0.001, injection)
        assert aux == ()
        assert coupled == swing_step(state, -800.0, 0.001)

    def test_aux_state_integrated_with_grid(self) -> None:
        state = _tripped_state()

        def injection(_frac: float, _dev: float, aux: State) -> tuple[float, State]:
            return 0.0, (-aux[0],)

        aux: State = (1.0,)
        for _ in range(100):
            state, aux = coupled_step(state, 0.0, 0.01, injection, aux)
        assert aux[0] == pytest.approx(math.exp(-1.0), rel=1e-9)

    def test_injection_sees_stage_fractions(self) -> None:
        seen: list[float] = []

        def injection(frac: float, _dev: float, _aux: State) -> tuple[float, State]:
            seen.append(frac)
            return 0.0, ()

        coupled_step(_tripped_state(), 0.0, 0.25, injection)
        assert seen == [0.0, 0.5, 0.5, 1.0]

    def test_injection_feeds_swing(self) -> None:
        state = _tripped_state()

        def injection(_frac: float, dev: float, _aux: State) -> tuple[float, State]:
            return -50_000.0 * dev, ()

        for _ in range(2000):
            state, _ = coupled_step(state, -1000.0, 0.001, injection)
        assert state.freq_dev > -0.03


class TestSecondaryControl:
    def test_restores_nominal_frequency(self) -> None:
        state = _tripped_state()
        for _ in range(60_000):
            state = swing_step(state, -1000.0, 0.001)
        assert abs(state.freq_dev) < 0.01
        assert state.secondary_power > 0.0

    def test_disabled_leaves_droop_offset(self) -> None:
        state = GridState.initial(GridConfig(secondary_gain=0.0)).with_generator_offline("G1")
        for _ in range(60_000):
            state = swing_step(state, -1000.0, 0.001)
        assert state.secondary_power == 0.0
        assert state.freq_dev < -0.1


class TestApplyDisturbance:
    def test_before_trigger(self) -> None:
        state = GridState.initial(GridConfig())
        after, power = apply_disturbance(state, DisturbanceEvent())
        assert power == 0.0
        assert after is state

    def test_at_and_after_trigger(self) -> None:
        state = GridState.initial(GridConfig())
        state = replace(state, time=5.0)
        after, power = apply_disturbance(state, DisturbanceEvent())
        assert power == -1000.0
        assert not next(g for g in after.generators if g.id == "G1").online

        again, power_again = apply_disturbance(after, DisturbanceEvent())
        assert power_again == -1000.0
        assert again.generators == after.generators

    def test_zero_loss_without_trip_is_null(self) -> None:
        event = DisturbanceEvent(trigger_time=0.0, power_loss=0.0, tripped_generator=None)
        state = GridState.initial(GridConfig())
        after, power = apply_disturbance(state, event)
        assert power == 0.0
        assert after == state

    def test_unknown_generator(self) -> None:
        event = DisturbanceEvent(tripped_generator="G99")
        with pytest.raises(ModelConfigurationError):
            apply_disturbance(GridState.initial(GridConfig()), event)


class TestRk4:
    def test_exponential_decay(self) -> None:
        y = (1.0,)
        for i in range(100):
            y = rk4_step(lambda _t, s: (-s[0],), i * 0.01, y, 0.01)
        assert y[0] == pytest.approx(math.exp(-1.0), rel=1e-9)
