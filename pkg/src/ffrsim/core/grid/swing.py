"""Aggregate swing equation with per-machine governors and secondary control.

All machines share one frequency deviation Δf.  With M = Σ 2·H_i·S_i / f0
over the online machines::

    dΔf/dt      = (P_net + P_inj + Σ P_gov,i + P_sec − D·Δf) / M
    dP_gov,i/dt = (clamp(−S_i/(R_i·f0)·Δf, ±limit_i·S_i) − P_gov,i) / T_i
    dP_sec/dt   = −K_sec·Δf

``P_net`` is held constant across the step.  ``P_inj`` comes from an
optional :data:`Injection` callback evaluated at every RK4 stage together
with the derivatives of the caller's own states, so storage dynamics and
the grid advance as one system.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import replace
from typing import TYPE_CHECKING

from ffrsim.core.errors import ModelConfigurationError, SystemCollapseError
from ffrsim.core.grid.integrate import State, rk4_step

if TYPE_CHECKING:
    from ffrsim.core.grid.models import DisturbanceEvent, GridState

#: ``injection(frac, dev, aux) -> (P_inj in MW, d(aux)/dt)``.  *frac* is the
#: stage position within the step (0, 0.5 or 1) and *aux* the caller's states.
Injection = Callable[[float, float, State], tuple[float, State]]

# Tolerance when comparing the accumulated clock against event times.
_TIME_EPS = 1e-9


def kinetic_constant(state: GridState) -> float:
    """M = Σ_online 2·H_i·S_i / f0 in MW·s/Hz."""
    total = sum(2.0 * state.effective_inertia(g) * g.rated_power for g in state.online)
    return total / state.nominal_freq


def swing_step(state: GridState, net_injection: float, dt: float) -> GridState:
    """Advance *state* by *dt* seconds under a constant *net_injection* (MW).

    Raises:
        ModelConfigurationError: If ``dt`` is not positive.
        SystemCollapseError: If no online inertia is left.
    """
    advanced, _ = coupled_step(state, net_injection, dt)
    return advanced


def coupled_step(
    state: GridState,
    net_injection: float,
    dt: float,
    injection: Injection | None = None,
    aux: State = (),
) -> tuple[GridState, State]:
    """Advance the grid and the caller's *aux* states by one RK4 step.

    Returns the new grid state and the new *aux* tuple.  Any clamping of
    *aux* (SOC floors, ratings) is left to the caller.

    Raises:
        ModelConfigurationError: If ``dt`` is not positive.
        SystemCollapseError: If no online inertia is left.
    """
    if dt <= 0:
        raise ModelConfigurationError("dt", f"must be > 0, got {dt}")
    m = kinetic_constant(state)
    if m <= 0:
        raise SystemCollapseError(state.time)

    f0 = state.nominal_freq
    damping = state.damping_d
    secondary_gain = state.secondary_gain
    gains: list[float] = []
    limits: list[float] = []
    inv_tau: list[float] = []
    for gen in state.generators:
        if gen.online:
            gains.append(gen.rated_power / (gen.governor_droop_r * f0))
            limits.append(gen.governor_limit * gen.rated_power)
            inv_tau.append(1.0 / gen.governor_time_const)
        else:
            gains.append(0.0)
            limits.append(0.0)
            inv_tau.append(0.0)
    n_gov = len(gains)
    inv_dt = 1.0 / dt

    def rhs(t: float, y: State) -> State:
        dev = y[0]
        governors = y[1 : n_gov + 1]
        secondary = y[n_gov + 1]
        power = net_injection
        d_aux: State = ()
        if injection is not None:
            p_inj, d_aux = injection(t * inv_dt, dev, y[n_gov + 2 :])
            power += p_inj
        d_dev = (power + sum(governors) + secondary - damping * dev) / m
        d_gov = tuple(
            (min(max(-k * dev, -lim), lim) - pg) * it
            for k, lim, it, pg in zip(gains, limits, inv_tau, governors, strict=True)
        )
        return (d_dev, *d_gov, -secondary_gain * dev, *d_aux)

    y0: State = (state.freq_dev, *state.governor_power, state.secondary_power, *aux)
    y1 = rk4_step(rhs, 0.0, y0, dt)
    advanced = replace(
        state,
        time=state.time + dt,
        freq_dev=y1[0],
        governor_power=y1[1 : n_gov + 1],
        secondary_power=y1[n_gov + 1],
    )
    return advanced, y1[n_gov + 2 :]


def apply_disturbance(state: GridState, event: DisturbanceEvent) -> tuple[GridState, float]:
    """Return the state after *event* (if due) and its power-balance contribution.

    The contribution is ``-power_loss`` from ``trigger_time`` onward and 0 before.
    When ``tripped_generator`` is set, that machine leaves the inertia and governor
    sums at ``trigger_time``.  Repeated application is idempotent.

    Raises:
        ModelConfigurationError: If ``tripped_generator`` names no generator.
    """
    target = event.tripped_generator
    if target is not None and all(g.id != target for g in state.generators):
        raise ModelConfigurationError("tripped_generator", f"unknown generator id {target!r}")

    if state.time + _TIME_EPS < event.trigger_time:
        return state, 0.0

    if target is not None and any(g.id == target and g.online for g in state.generators):
        state = state.with_generator_offline(target)
    return state, -event.power_loss
