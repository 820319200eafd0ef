"""Droop-command allocation and the per-run coordinator.

:func:`allocate` turns participation weights into per-resource droop
commands ``-α_i·k_i·Δf``; the resources apply their own delays, limits and
dynamics to the α they receive.  When a gain cap is configured and the
aggregate gain Σα_i·k_i would exceed it, every α is scaled down by the
same factor.

:class:`Coordinator` recomputes weights every ``update_interval`` seconds
and holds them in between.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt

from ffrsim.core.coordination.models import AllocationStrategy
from ffrsim.core.coordination.weights import (
    adaptive_weights,
    blended_dc_time_constant,
    fixed_weights,
)
from ffrsim.core.errors import MetricsError

if TYPE_CHECKING:
    from ffrsim.core.coordination.models import (
        ParticipationWeights,
        StrategyConfig,
        StrategyKind,
        Triple,
    )
    from ffrsim.core.resources.models import ResourcesConfig
    from ffrsim.core.scenario.models import RunResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class AllocationCommand:
    """Effective weights handed to the resources, after any gain cap."""

    weights: ParticipationWeights
    alpha_ev: float
    alpha_dc: float
    alpha_bess: float
    ev_command: float
    dc_command: float
    bess_command: float
    aggregate_gain: float
    capped: bool = False


def aggregate_gain(weights: ParticipationWeights, gains: Triple) -> float:
    """Σ α_i·k_i in MW/Hz."""
    return (
        weights.alpha_ev * gains[0] + weights.alpha_dc * gains[1] + weights.alpha_bess * gains[2]
    )


def allocate(
    weights: ParticipationWeights,
    dev: float,
    gains: Triple,
    gain_cap: float | None = None,
) -> AllocationCommand:
    """Split the droop command across (EV, DC, BESS).

    *gains* are ``(k_EV, k_UPS + β, k_B)``; within the data center α_DC
    applies to both the UPS and the IT channel.
    """
    total_gain = aggregate_gain(weights, gains)
    scale = 1.0
    if gain_cap is not None and total_gain > gain_cap:
        scale = gain_cap / total_gain
    a_ev = weights.alpha_ev * scale
    a_dc = weights.alpha_dc * scale
    a_bess = weights.alpha_bess * scale
    return AllocationCommand(
        weights=weights,
        alpha_ev=a_ev,
        alpha_dc=a_dc,
        alpha_bess=a_bess,
        ev_command=-a_ev * gains[0] * dev,
        dc_command=-a_dc * gains[1] * dev,
        bess_command=-a_bess * gains[2] * dev,
        aggregate_gain=total_gain * scale,
        capped=scale < 1.0,
    )


def strategy_for(
    kind: StrategyKind | None,
    config: StrategyConfig,
    resources: ResourcesConfig,
) -> AllocationStrategy:
    """Resolve the strategy *kind* (default ``config.kind``) against the configuration.

    Time constants are (T_EV, T_DC, T_BESS) with T_DC the blended UPS/IT
    response time unless ``config.t_dc_override`` is set, and T_BESS
    ``config.t_bess_response`` or else the converter lag.
    """
    kind = kind or config.kind
    t_dc = config.t_dc_override or blended_dc_time_constant(resources.dc)
    t_bess = config.t_bess_response or resources.bess.time_const_t_b
    time_constants = (resources.ev.delay_t_ev, t_dc, t_bess)
    fixed = None if kind == "adaptive" else fixed_weights(kind, config=config)
    return AllocationStrategy(
        kind=kind,
        time_constants=time_constants,
        fixed=fixed,
        gain_cap=config.gain_cap,
        update_interval=config.update_interval,
        capacity_model=config.capacity_model,
    )


class Coordinator:
    """Zero-order-hold weight computation for one simulation."""

    def __init__(self, strategy: AllocationStrategy, gains: Triple) -> None:
        self.strategy = strategy
        self.gains = gains
        self._cap_logged = False

    def weights_for(self, capacities: Triple) -> ParticipationWeights:
        if self.strategy.fixed is not None:
            return self.strategy.fixed
        return adaptive_weights(capacities, self.strategy.time_constants)

    def update(self, capacities: Triple, dev: float) -> AllocationCommand:
        """Recompute weights from the current *capacities* and allocate at *dev*."""
        command = allocate(self.weights_for(capacities), dev, self.gains, self.strategy.gain_cap)
        if command.capped and not self._cap_logged:
            logger.info(
                "Gain cap %.3f MW/Hz active; allocation scaled down", self.strategy.gain_cap
            )
            self._cap_logged = True
        return command


@dataclass(frozen=True, slots=True)
class WeightsTrace:
    """Sampled participation weights of one run."""

    time: npt.NDArray[np.float64]
    alpha_ev: npt.NDArray[np.float64]
    alpha_dc: npt.NDArray[np.float64]
    alpha_bess: npt.NDArray[np.float64]

    def stacked(self) -> npt.NDArray[np.float64]:
        """``(n, 3)`` array of (EV, DC, BESS) weights."""
        return np.column_stack((self.alpha_ev, self.alpha_dc, self.alpha_bess))

    def is_constant(self) -> bool:
        alphas = self.stacked()
        return bool(np.all(alphas == alphas[0]))


def weights_trace(run: RunResult) -> WeightsTrace:
    """Return the α time series recorded by *run*.

    Raises:
        MetricsError: If the run did not log its weights.
    """
    series = run.series
    if not run.weights_logged:
        raise MetricsError("participation weights were not logged for this run")
    return WeightsTrace(
        time=series.t,
        alpha_ev=series.alpha_ev,
        alpha_dc=series.alpha_dc,
        alpha_bess=series.alpha_bess,
    )
