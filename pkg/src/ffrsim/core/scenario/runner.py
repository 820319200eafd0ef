"""Fixed-step simulation loop.

Each step, in order:

1. apply the disturbance if due and read the COI deviation Δf;
2. push Δf into the resource delay lines;
3. refresh the participation weights on the coordinator cadence;
4. sample the resource injections at the start of the step;
5. integrate the swing equation, governors, secondary control and the
   resource storage states as one RK4 system, then apply the SOC limits;
6. advance the clock to ``(i + 1) · dt``.

Samples are recorded every ``sample_stride`` seconds, including t = 0 and
t = duration.  The loop is pure float arithmetic, so identical scenarios
produce bit-identical results.
"""

from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING

from ffrsim.core.coordination.allocation import Coordinator
from ffrsim.core.errors import NonFiniteStateError
from ffrsim.core.grid.models import GridState
from ffrsim.core.grid.swing import apply_disturbance, coupled_step
from ffrsim.core.resources.fleet import ResourceFleet
from ffrsim.core.resources.models import BessModel, DataCenterModel, EvFleetModel
from ffrsim.core.scenario.metrics import compute_metrics
from ffrsim.core.scenario.models import RunResult, TimeSeries
from ffrsim.utils.telemetry import (
    ATTR_CASE,
    ATTR_DT,
    ATTR_DURATION,
    ATTR_NADIR,
    ATTR_STEPS,
    ATTR_STRATEGY,
    get_tracer,
)

if TYPE_CHECKING:
    from ffrsim.core.coordination.allocation import AllocationCommand
    from ffrsim.core.scenario.models import Scenario

logger = logging.getLogger(__name__)
_tracer = get_tracer(__name__)


def build_fleet(scenario: Scenario) -> ResourceFleet:
    """Instantiate the scenario's resources with scaled droop gains."""
    res = scenario.resources
    scale = res.droop_gain_scale
    horizon = scenario.solver.capacity_horizon
    return ResourceFleet(
        EvFleetModel.from_params(
            res.ev, gain_scale=scale, capacity_horizon=horizon, bidirectional=res.bidirectional
        ),
        DataCenterModel.from_params(res.dc, gain_scale=scale),
        BessModel.from_params(
            res.bess, gain_scale=scale, capacity_horizon=horizon, bidirectional=res.bidirectional
        ),
        step=scenario.solver.dt,
        enabled=scenario.mask.as_tuple(),
    )


def _droop_gains(fleet: ResourceFleet) -> tuple[float, float, float]:
    return (
        fleet.ev.droop_gain_k_ev,
        fleet.dc.ups_gain_k_ups + fleet.dc.workload_gain_beta,
        fleet.bess.droop_gain_k_b,
    )


def run_scenario(scenario: Scenario) -> RunResult:
    """Simulate *scenario* and compute its metrics.

    Raises:
        SystemCollapseError: If every generator has tripped.
        NonFiniteStateError: If the frequency deviation stops being finite.
    """
    solver = scenario.solver
    dt = solver.dt
    n_steps = solver.n_steps
    stride = solver.stride_steps
    update_every = max(1, round(scenario.strategy.update_interval / dt))
    capacity_model = scenario.strategy.capacity_model
    event = scenario.disturbance
    log_weights = scenario.log_weights
    nan = math.nan

    with _tracer.start_as_current_span("scenario.run") as span:
        span.set_attribute(ATTR_CASE, scenario.case_id)
        span.set_attribute(ATTR_STRATEGY, scenario.strategy.kind)
        span.set_attribute(ATTR_STEPS, n_steps)
        span.set_attribute(ATTR_DT, dt)
        span.set_attribute(ATTR_DURATION, solver.duration)
        logger.info(
            "Running %s: %d steps of %.4g s (%s)",
            scenario.label,
            n_steps,
            dt,
            f"disturbance at {event.trigger_time:.3f} s" if event else "no disturbance",
        )

        state = GridState.initial(scenario.grid)
        f0 = state.nominal_freq
        fleet = build_fleet(scenario)
        coordinator = Coordinator(scenario.strategy, _droop_gains(fleet))
        command: AllocationCommand | None = None
        rows: list[tuple[float, ...]] = []

        for i in range(n_steps + 1):
            p_dist = 0.0
            if event is not None:
                state, p_dist = apply_disturbance(state, event)
            dev = state.freq_dev
            if not math.isfinite(dev):
                raise NonFiniteStateError(i * dt, "freq_dev", dev)

            fleet.observe(dev)
            if command is None or i % update_every == 0:
                command = coordinator.update(fleet.capacities(capacity_model), dev)
            soc_ev, soc_bess = fleet.ev.soc, fleet.bess.soc
            dynamics = fleet.dynamics(command.alpha_ev, command.alpha_dc, command.alpha_bess)
            sample = dynamics.sample(dev)
            fleet.record(sample)

            if i % stride == 0:
                if log_weights:
                    weights = command.weights
                    alphas = (weights.alpha_ev, weights.alpha_dc, weights.alpha_bess)
                else:
                    alphas = (nan, nan, nan)
                rows.append(
                    (
                        i * dt,
                        f0 + dev,
                        sample.ev_power,
                        sample.ups_power,
                        sample.it_reduction,
                        sample.bess_power,
                        sample.total_ffr,
                        *alphas,
                        soc_ev,
                        soc_bess,
                    )
                )
            if i == n_steps:
                break
            state, storage = coupled_step(state, p_dist, dt, dynamics, fleet.storage_state)
            fleet.commit(storage)

        series = TimeSeries.from_rows(rows)
        metrics = compute_metrics(series, f0, scenario.disturbance_time, scenario.metrics)
        span.set_attribute(ATTR_NADIR, metrics.nadir_hz)
        logger.info("Finished %s: %s", scenario.label, metrics.summary_line())

    return RunResult(
        scenario=scenario,
        series=series,
        metrics=metrics,
        steps=n_steps,
        weights_logged=log_weights,
    )
