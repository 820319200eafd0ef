"""The three FFR resources of one scenario, with their measurement delay lines.

A :class:`ResourceFleet` is owned by a single simulation.  Each step the
runner pushes the current COI deviation with :meth:`ResourceFleet.observe`,
asks for :meth:`ResourceFleet.capacities` when the coordinator updates and
builds a :class:`FleetDynamics` for the allocated weights.  The dynamics
object is handed to the grid integrator together with
:attr:`ResourceFleet.storage_state`, so BESS output and both SOCs advance
inside the same RK4 stages as the frequency; :meth:`ResourceFleet.commit`
then applies the SOC and rating limits.
"""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import TYPE_CHECKING

from ffrsim.core.grid.delay import DelayLine
from ffrsim.core.resources.bess import bess_settle, bess_target
from ffrsim.core.resources.capacity import available_capacity, headroom_capacity
from ffrsim.core.resources.datacenter import it_reduction, ups_power
from ffrsim.core.resources.ev import ev_power
from ffrsim.core.resources.models import ResourcePowerSample

if TYPE_CHECKING:
    from ffrsim.core.grid.integrate import State
    from ffrsim.core.resources.models import (
        BessModel,
        CapacityModel,
        DataCenterModel,
        EvFleetModel,
    )

logger = logging.getLogger(__name__)


class FleetDynamics:
    """Fleet injection and storage derivatives at fixed weights.

    Calling the object with ``(frac, dev, (P_BESS, soc_BESS, soc_EV))``
    returns the total injection in MW and the derivatives of those three
    states.  Delayed channels read their lines at the stage time; the EV and
    BESS capacity limits follow the stage SOCs.
    """

    __slots__ = ("_alphas", "_fleet", "_inv_e_bess", "_inv_e_ev", "_inv_t_b")

    def __init__(
        self, fleet: ResourceFleet, alpha_ev: float, alpha_dc: float, alpha_bess: float
    ) -> None:
        self._fleet = fleet
        self._alphas = (alpha_ev, alpha_dc, alpha_bess)
        self._inv_t_b = 1.0 / fleet.bess.time_const_t_b
        self._inv_e_bess = 1.0 / (3600.0 * fleet.bess.energy_e_bess)
        self._inv_e_ev = 1.0 / (3600.0 * fleet.ev.energy_e_ev)

    def channels(
        self, frac: float, dev: float, soc_ev: float | None = None
    ) -> tuple[float, float, float]:
        """``(P_EV, P_UPS, ΔP_IT)`` in MW at stage fraction *frac*."""
        fleet = self._fleet
        alpha_ev, alpha_dc, _ = self._alphas
        p_ev = (
            ev_power(fleet.ev, alpha_ev, fleet.ev_line.read_at(frac, dev), soc=soc_ev)
            if fleet.ev_enabled
            else 0.0
        )
        if not fleet.dc_enabled:
            return p_ev, 0.0, 0.0
        p_ups = ups_power(fleet.dc, alpha_dc, fleet.ups_line.read_at(frac, dev))
        p_it = it_reduction(fleet.dc, alpha_dc, fleet.it_line.read_at(frac, dev))
        return p_ev, p_ups, p_it

    def sample(self, dev: float) -> ResourcePowerSample:
        """Per-channel output at the start of the step."""
        p_ev, p_ups, p_it = self.channels(0.0, dev)
        fleet = self._fleet
        p_bess = fleet.bess.power_output if fleet.bess_enabled else 0.0
        return ResourcePowerSample(
            ev_power=p_ev, ups_power=p_ups, it_reduction=p_it, bess_power=p_bess
        )

    def __call__(self, frac: float, dev: float, aux: State) -> tuple[float, State]:
        p_bess, soc_bess, soc_ev = aux
        p_ev, p_ups, p_it = self.channels(frac, dev, soc_ev)
        fleet = self._fleet
        if fleet.bess_enabled:
            target = bess_target(fleet.bess, self._alphas[2], dev, soc=soc_bess)
            d_bess = (target - p_bess) * self._inv_t_b
        else:
            d_bess = 0.0
        derivatives = (d_bess, -p_bess * self._inv_e_bess, -p_ev * self._inv_e_ev)
        return p_ev + p_ups + p_it + p_bess, derivatives


class ResourceFleet:
    """EV fleet, data center and BESS sharing one integration step."""

    def __init__(
        self,
        ev: EvFleetModel,
        dc: DataCenterModel,
        bess: BessModel,
        *,
        step: float,
        enabled: tuple[bool, bool, bool] = (True, True, True),
    ) -> None:
        self.ev = ev
        self.dc = dc
        self.bess = bess
        self.step_size = step
        self.ev_enabled, self.dc_enabled, self.bess_enabled = enabled
        self.ev_line = DelayLine(ev.delay_t_ev, step)
        self.ups_line = DelayLine(dc.effective_ups_delay, step)
        self.it_line = DelayLine(dc.it_delay_t_it, step)
        self._last = ResourcePowerSample()
        self._ev_floor_logged = False

    @property
    def last_sample(self) -> ResourcePowerSample:
        return self._last

    @property
    def storage_state(self) -> State:
        """``(P_BESS, soc_BESS, soc_EV)``, the states integrated with the grid."""
        return (self.bess.power_output, self.bess.soc, self.ev.soc)

    def observe(self, dev: float) -> None:
        """Feed the current COI deviation into every delay line."""
        self.ev_line.push(dev)
        self.ups_line.push(dev)
        self.it_line.push(dev)

    def capacities(self, model: CapacityModel = "energy") -> tuple[float, float, float]:
        """Capacities ``(W_EV, W_DC, W_BESS)`` seen by the coordinator; 0 for disabled resources."""
        if model == "headroom":
            ev = headroom_capacity(self.ev, self._last.ev_power)
            dc = headroom_capacity(self.dc, self._last.dc_power)
            bess = headroom_capacity(self.bess, self.bess.power_output)
        else:
            ev = available_capacity(self.ev)
            dc = available_capacity(self.dc)
            bess = available_capacity(self.bess)
        return (
            ev if self.ev_enabled else 0.0,
            dc if self.dc_enabled else 0.0,
            bess if self.bess_enabled else 0.0,
        )

    def dynamics(self, alpha_ev: float, alpha_dc: float, alpha_bess: float) -> FleetDynamics:
        """Dynamics of this step under the allocated weights."""
        return FleetDynamics(self, alpha_ev, alpha_dc, alpha_bess)

    def record(self, sample: ResourcePowerSample) -> None:
        """Remember *sample* as the latest output (used by the headroom capacity model)."""
        self._last = sample

    def commit(self, storage: State) -> None:
        """Adopt the integrated ``(P_BESS, soc_BESS, soc_EV)`` within their limits."""
        p_bess, soc_bess, soc_ev = storage
        if self.ev_enabled:
            ev = self.ev
            if soc_ev < ev.soc:
                soc_ev = max(soc_ev, ev.soc_min)
            elif soc_ev > ev.soc:
                soc_ev = min(soc_ev, ev.soc_max)
            self.ev = replace(ev, soc=soc_ev)
            if soc_ev <= ev.soc_min and not self._ev_floor_logged:
                logger.info("EV fleet reached SOC floor %.3f", ev.soc_min)
                self._ev_floor_logged = True
        if self.bess_enabled:
            self.bess = bess_settle(self.bess, p_bess, soc_bess)
