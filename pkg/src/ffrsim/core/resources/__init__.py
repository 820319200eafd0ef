"""FFR resources: EV fleet, data center (UPS + IT) and BESS."""

from ffrsim.core.resources.bess import bess_settle, bess_step, bess_target
from ffrsim.core.resources.capacity import absorb_capacity, available_capacity, headroom_capacity
from ffrsim.core.resources.datacenter import it_consumption, it_reduction, ups_power
from ffrsim.core.resources.ev import ev_power, ev_soc_step
from ffrsim.core.resources.fleet import FleetDynamics, ResourceFleet
from ffrsim.core.resources.models import (
    DEFAULT_CAPACITY_HORIZON,
    BessModel,
    BessParams,
    CapacityModel,
    DataCenterModel,
    DataCenterParams,
    EvFleetModel,
    EvFleetParams,
    ResourceModel,
    ResourcePowerSample,
    ResourcesConfig,
)

__all__ = [
    "DEFAULT_CAPACITY_HORIZON",
    "BessModel",
    "BessParams",
    "CapacityModel",
    "DataCenterModel",
    "DataCenterParams",
    "EvFleetModel",
    "EvFleetParams",
    "FleetDynamics",
    "ResourceFleet",
    "ResourceModel",
    "ResourcePowerSample",
    "ResourcesConfig",
    "absorb_capacity",
    "available_capacity",
    "bess_settle",
    "bess_step",
    "bess_target",
    "ev_power",
    "ev_soc_step",
    "headroom_capacity",
    "it_consumption",
    "it_reduction",
    "ups_power",
]
