"""FFR resource parameters and per-step resource state.

The ``*Params`` classes are the validated ``resources`` configuration
sections (defaults are the nominal simulation parameters for the EV
fleet, data center and BESS).  The ``*Model`` dataclasses are the immutable
runtime values advanced by :mod:`ffrsim.core.resources.ev`,
:mod:`~ffrsim.core.resources.datacenter` and :mod:`~ffrsim.core.resources.bess`;
their droop gains are already multiplied by ``droop_gain_scale``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

DEFAULT_CAPACITY_HORIZON = 10.0

CapacityModel = Literal["energy", "headroom"]


def _check_soc_window(soc_min: float, soc_max: float, soc_initial: float) -> None:
    if not 0.0 <= soc_min < soc_max <= 1.0:
        msg = f"require 0 <= soc_min < soc_max <= 1, got soc_min={soc_min}, soc_max={soc_max}"
        raise ValueError(msg)
    if not 0.0 <= soc_initial <= 1.0:
        msg = f"soc_initial must lie in [0, 1], got {soc_initial}"
        raise ValueError(msg)


class EvFleetParams(BaseModel):
    """Aggregated V2G fleet (``resources.ev``)."""

    model_config = ConfigDict(extra="forbid")

    droop_gain_k_ev: float = Field(default=25.0, ge=0, description="k_EV (MW/Hz).")
    delay_t_ev: float = Field(default=0.08, ge=0, description="T_EV (s).")
    rated_power_w_ev: float = Field(default=200.0, gt=0, description="W_EV (MW).")
    energy_e_ev: float = Field(default=100.0, gt=0, description="E_EV (MWh).")
    soc_initial: float = 0.6
    soc_min: float = 0.2
    soc_max: float = 0.9
    plug_in_rate: float = Field(default=0.45, gt=0, le=1, description="Connected share of W_EV.")

    @model_validator(mode="after")
    def _validate_soc(self) -> EvFleetParams:
        _check_soc_window(self.soc_min, self.soc_max, self.soc_initial)
        return self


class DataCenterParams(BaseModel):
    """UPS inverters plus IT workload modulation (``resources.dc``)."""

    model_config = ConfigDict(extra="forbid")

    ups_gain_k_ups: float = Field(default=20.0, ge=0, description="k_UPS (MW/Hz).")
    ups_delay: float = Field(default=0.01, ge=0, description="UPS inverter delay (s).")
    ups_delay_enabled: bool = True
    ups_capacity_w_ups: float = Field(default=100.0, ge=0, description="W_UPS (MW).")
    it_baseline_p_it0: float = Field(default=150.0, ge=0, description="P_IT0 (MW).")
    workload_gain_beta: float = Field(default=12.0, ge=0, description="β (MW/Hz).")
    it_delay_t_it: float = Field(default=0.2, ge=0, description="T_IT (s).")
    it_flex_w_it: float = Field(default=50.0, ge=0, description="W_IT (MW).")

    @model_validator(mode="after")
    def _validate_flex(self) -> DataCenterParams:
        if self.it_flex_w_it > self.it_baseline_p_it0:
            msg = (
                f"it_flex_w_it ({self.it_flex_w_it}) cannot exceed "
                f"it_baseline_p_it0 ({self.it_baseline_p_it0})"
            )
            raise ValueError(msg)
        return self


class BessParams(BaseModel):
    """Converter-interfaced battery (``resources.bess``)."""

    model_config = ConfigDict(extra="forbid")

    droop_gain_k_b: float = Field(default=40.0, ge=0, description="k_B (MW/Hz).")
    time_const_t_b: float = Field(default=0.04, gt=0, description="T_B (s).")
    rated_power_w_b: float = Field(default=150.0, gt=0, description="W_B (MW).")
    energy_e_bess: float = Field(default=300.0, gt=0, description="E_BESS (MWh).")
    soc_initial: float = 0.1017
    soc_min: float = 0.1
    soc_max: float = 0.9

    @model_validator(mode="after")
    def _validate_soc(self) -> BessParams:
        _check_soc_window(self.soc_min, self.soc_max, self.soc_initial)
        return self


class ResourcesConfig(BaseModel):
    """The ``resources`` section of a scenario configuration."""

    model_config = ConfigDict(extra="forbid")

    ev: EvFleetParams = Field(default_factory=EvFleetParams)
    dc: DataCenterParams = Field(default_factory=DataCenterParams)
    bess: BessParams = Field(default_factory=BessParams)
    bidirectional: bool = False
    droop_gain_scale: float = Field(
        default=155.0, gt=0, description="Multiplier applied to every FFR droop gain."
    )


@dataclass(frozen=True, slots=True)
class EvFleetModel:
    droop_gain_k_ev: float
    delay_t_ev: float
    rated_power_w_ev: float
    energy_e_ev: float
    soc: float
    soc_min: float = 0.2
    soc_max: float = 0.9
    plug_in_rate: float = 1.0
    capacity_horizon: float = DEFAULT_CAPACITY_HORIZON
    bidirectional: bool = False

    @classmethod
    def from_params(
        cls,
        params: EvFleetParams,
        *,
        gain_scale: float = 1.0,
        capacity_horizon: float = DEFAULT_CAPACITY_HORIZON,
        bidirectional: bool = False,
    ) -> EvFleetModel:
        return cls(
            droop_gain_k_ev=params.droop_gain_k_ev * gain_scale,
            delay_t_ev=params.delay_t_ev,
            rated_power_w_ev=params.rated_power_w_ev,
            energy_e_ev=params.energy_e_ev,
            soc=params.soc_initial,
            soc_min=params.soc_min,
            soc_max=params.soc_max,
            plug_in_rate=params.plug_in_rate,
            capacity_horizon=capacity_horizon,
            bidirectional=bidirectional,
        )

    @property
    def connected_power(self) -> float:
        """Power rating of the plugged-in share of the fleet (MW)."""
        return self.rated_power_w_ev * self.plug_in_rate


@dataclass(frozen=True, slots=True)
class DataCenterModel:
    ups_gain_k_ups: float
    ups_capacity_w_ups: float
    it_baseline_p_it0: float
    workload_gain_beta: float
    it_delay_t_it: float
    it_flex_w_it: float
    ups_delay: float = 0.01
    ups_delay_enabled: bool = True

    @classmethod
    def from_params(cls, params: DataCenterParams, *, gain_scale: float = 1.0) -> DataCenterModel:
        return cls(
            ups_gain_k_ups=params.ups_gain_k_ups * gain_scale,
            ups_capacity_w_ups=params.ups_capacity_w_ups,
            it_baseline_p_it0=params.it_baseline_p_it0,
            workload_gain_beta=params.workload_gain_beta * gain_scale,
            it_delay_t_it=params.it_delay_t_it,
            it_flex_w_it=params.it_flex_w_it,
            ups_delay=params.ups_delay,
            ups_delay_enabled=params.ups_delay_enabled,
        )

    @property
    def effective_ups_delay(self) -> float:
        return self.ups_delay if self.ups_delay_enabled else 0.0


@dataclass(frozen=True, slots=True)
class BessModel:
    droop_gain_k_b: float
    time_const_t_b: float
    rated_power_w_b: float
    energy_e_bess: float
    soc: float
    soc_min: float = 0.1
    soc_max: float = 0.9
    power_output: float = 0.0
    capacity_horizon: float = DEFAULT_CAPACITY_HORIZON
    bidirectional: bool = False

    @classmethod
    def from_params(
        cls,
        params: BessParams,
        *,
        gain_scale: float = 1.0,
        capacity_horizon: float = DEFAULT_CAPACITY_HORIZON,
        bidirectional: bool = False,
    ) -> BessModel:
        return cls(
            droop_gain_k_b=params.droop_gain_k_b * gain_scale,
            time_const_t_b=params.time_const_t_b,
            rated_power_w_b=params.rated_power_w_b,
            energy_e_bess=params.energy_e_bess,
            soc=params.soc_initial,
            soc_min=params.soc_min,
            soc_max=params.soc_max,
            capacity_horizon=capacity_horizon,
            bidirectional=bidirectional,
        )


ResourceModel = EvFleetModel | DataCenterModel | BessModel


@dataclass(frozen=True, slots=True)
class ResourcePowerSample:
    """Per-channel FFR output at one instant (MW, positive = support)."""

    ev_power: float = 0.0
    ups_power: float = 0.0
    it_reduction: float = 0.0
    bess_power: float = 0.0

    @property
    def dc_power(self) -> float:
        return self.ups_power + self.it_reduction

    @property
    def total_ffr(self) -> float:
        return self.ev_power + self.ups_power + self.it_reduction + self.bess_power
