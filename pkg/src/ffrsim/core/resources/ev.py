"""Aggregated V2G fleet: delayed droop response and SOC bookkeeping."""

from __future__ import annotations

from dataclasses import replace
from typing import TYPE_CHECKING

from ffrsim.core.errors import ModelConfigurationError
from ffrsim.core.resources.capacity import absorb_capacity, available_capacity

if TYPE_CHECKING:
    from ffrsim.core.resources.models import EvFleetModel


def ev_power(
    model: EvFleetModel, alpha_ev: float, delayed_dev: float, *, soc: float | None = None
) -> float:
    """Fleet injection in MW for the deviation observed ``delay_t_ev`` seconds ago.

    Output is ``-alpha_ev * k_EV * delayed_dev`` clamped to ``[0, W(t)]``
    (``[-W_charge(t), W(t)]`` for a bidirectional fleet).  *soc* overrides
    the stored SOC when evaluating W(t).
    """
    command = -alpha_ev * model.droop_gain_k_ev * delayed_dev
    upper = available_capacity(model, soc=soc)
    lower = -absorb_capacity(model, soc=soc) if model.bidirectional else 0.0
    return min(max(command, lower), upper)


def ev_soc_step(model: EvFleetModel, power: float, dt: float) -> EvFleetModel:
    """Discharge the fleet by *power* MW for *dt* seconds.

    The SOC never crosses the floor while discharging nor the ceiling while
    charging.

    Raises:
        ModelConfigurationError: If ``dt`` or ``energy_e_ev`` is not positive.
    """
    if dt <= 0:
        raise ModelConfigurationError("dt", f"must be > 0, got {dt}")
    if model.energy_e_ev <= 0:
        raise ModelConfigurationError("energy_e_ev", f"must be > 0, got {model.energy_e_ev}")
    if power == 0:
        return model
    soc = model.soc - power * dt / (3600.0 * model.energy_e_ev)
    soc = max(soc, model.soc_min) if power > 0 else min(soc, model.soc_max)
    return replace(model, soc=soc)
