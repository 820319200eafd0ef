"""Available response capacity W_i(t) of each FFR resource.

Energy-limited resources (EV fleet, BESS) can sustain at most the power that
drains their usable energy above the SOC floor within *horizon* seconds,
capped by their power rating.  The data center's capacity is its fixed
UPS plus flexible IT share.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from ffrsim.core.errors import ModelConfigurationError
from ffrsim.core.resources.models import BessModel, DataCenterModel, EvFleetModel

if TYPE_CHECKING:
    from ffrsim.core.resources.models import ResourceModel


def _energy_limited(rating: float, usable_soc: float, energy_mwh: float, horizon: float) -> float:
    if usable_soc <= 0:
        return 0.0
    return min(rating, usable_soc * energy_mwh * 3600.0 / horizon)


def _resolve_horizon(resource: ResourceModel, horizon: float | None) -> float:
    if horizon is None:
        horizon = resource.capacity_horizon if not isinstance(resource, DataCenterModel) else 1.0
    if horizon <= 0:
        raise ModelConfigurationError("capacity_horizon", f"must be > 0, got {horizon}")
    return horizon


def available_capacity(
    resource: ResourceModel, horizon: float | None = None, *, soc: float | None = None
) -> float:
    """Return the discharge capacity of *resource* in MW (0 at or below the SOC floor).

    *horizon* defaults to the resource's own ``capacity_horizon``; *soc*
    replaces the stored SOC of an energy-limited resource.
    """
    h = _resolve_horizon(resource, horizon)
    match resource:
        case EvFleetModel():
            level = resource.soc if soc is None else soc
            return _energy_limited(
                resource.connected_power, level - resource.soc_min, resource.energy_e_ev, h
            )
        case BessModel():
            level = resource.soc if soc is None else soc
            return _energy_limited(
                resource.rated_power_w_b, level - resource.soc_min, resource.energy_e_bess, h
            )
        case DataCenterModel():
            return resource.ups_capacity_w_ups + resource.it_flex_w_it


def absorb_capacity(
    resource: EvFleetModel | BessModel, horizon: float | None = None, *, soc: float | None = None
) -> float:
    """Charging headroom in MW (0 at or above the SOC ceiling)."""
    h = _resolve_horizon(resource, horizon)
    level = resource.soc if soc is None else soc
    if isinstance(resource, EvFleetModel):
        return _energy_limited(
            resource.connected_power, resource.soc_max - level, resource.energy_e_ev, h
        )
    return _energy_limited(
        resource.rated_power_w_b, resource.soc_max - level, resource.energy_e_bess, h
    )


def headroom_capacity(
    resource: ResourceModel, present_output: float, horizon: float | None = None
) -> float:
    """Instantaneous headroom: available capacity minus present output, floored at 0."""
    return max(0.0, available_capacity(resource, horizon) - present_output)
