"""Data-center FFR: UPS inverter injection and IT workload curtailment.

Both channels share the data center's participation weight α_DC and only
ever support the grid (output ≥ 0 on underfrequency, 0 otherwise).
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ffrsim.core.resources.models import DataCenterModel


def ups_power(model: DataCenterModel, alpha_dc: float, dev: float) -> float:
    """UPS discharge in MW, clamped to ``[0, W_UPS]``."""
    command = -alpha_dc * model.ups_gain_k_ups * dev
    return min(max(command, 0.0), model.ups_capacity_w_ups)


def it_reduction(model: DataCenterModel, alpha_dc: float, delayed_dev: float) -> float:
    """IT load relieved in MW, clamped to ``[0, W_IT]``."""
    command = -alpha_dc * model.workload_gain_beta * delayed_dev
    return min(max(command, 0.0), model.it_flex_w_it)


def it_consumption(model: DataCenterModel, reduction: float) -> float:
    """Actual IT draw ``P_IT0 - reduction`` in MW."""
    return model.it_baseline_p_it0 - reduction
