"""Battery energy storage with first-order converter dynamics.

The pair ``(P, soc)`` follows::

    dP/dt   = (target - P) / T_B
    dsoc/dt = -P / (3600 · E_BESS)

During a scenario these derivatives are integrated inside the grid's RK4
stages (see :class:`~ffrsim.core.resources.fleet.FleetDynamics`);
:func:`bess_step` integrates them alone with the deviation held constant.
Either way :func:`bess_settle` applies the rating and SOC limits at the
end of the step.
"""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import TYPE_CHECKING

from ffrsim.core.errors import ModelConfigurationError
from ffrsim.core.grid.integrate import rk4_step
from ffrsim.core.resources.capacity import absorb_capacity, available_capacity

if TYPE_CHECKING:
    from ffrsim.core.grid.integrate import State
    from ffrsim.core.resources.models import BessModel

logger = logging.getLogger(__name__)


def bess_target(
    model: BessModel, alpha_bess: float, dev: float, *, soc: float | None = None
) -> float:
    """Converter set-point in MW: ``-alpha_bess * k_B * dev`` within the SOC-derated bounds.

    *soc* overrides the stored SOC when deriving the bounds.
    """
    command = -alpha_bess * model.droop_gain_k_b * dev
    upper = available_capacity(model, soc=soc)
    lower = -absorb_capacity(model, soc=soc) if model.bidirectional else 0.0
    return min(max(command, lower), upper)


def bess_settle(model: BessModel, power: float, soc: float) -> BessModel:
    """Return *model* at the integrated ``(power, soc)`` after rating and SOC limits.

    Output is clamped to ±W_B.  A discharging battery that reaches the SOC
    floor (or a charging one that reaches the ceiling) is pinned there with
    zero output.
    """
    rating = model.rated_power_w_b
    power = min(max(power, -rating), rating)

    if soc <= model.soc_min and power > 0:
        if model.soc > model.soc_min:
            logger.info("BESS reached SOC floor %.3f; output forced to 0", model.soc_min)
        soc, power = model.soc_min, 0.0
    elif soc >= model.soc_max and power < 0:
        soc, power = model.soc_max, 0.0

    return replace(model, power_output=power, soc=soc)


def bess_step(
    model: BessModel, alpha_bess: float, dev: float, dt: float
) -> tuple[BessModel, float]:
    """Advance the converter and SOC by *dt*; return the new model and its output (MW).

    The set-point bound follows the SOC within the step.

    Raises:
        ModelConfigurationError: If ``time_const_t_b`` or ``dt`` is not positive.
    """
    if model.time_const_t_b <= 0:
        raise ModelConfigurationError(
            "time_const_t_b", f"must be > 0, got {model.time_const_t_b}"
        )
    if dt <= 0:
        raise ModelConfigurationError("dt", f"must be > 0, got {dt}")

    inv_tau = 1.0 / model.time_const_t_b
    inv_energy = 1.0 / (3600.0 * model.energy_e_bess)

    def rhs(_t: float, y: State) -> State:
        target = bess_target(model, alpha_bess, dev, soc=y[1])
        return ((target - y[0]) * inv_tau, -y[0] * inv_energy)

    power, soc = rk4_step(rhs, 0.0, (model.power_output, model.soc), dt)
    updated = bess_settle(model, power, soc)
    return updated, updated.power_output
