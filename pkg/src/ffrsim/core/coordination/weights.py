"""Participation-weight rules.

The adaptive rule weighs each resource by its speed-capacity ratio::

    α_i = (W_i / T_i) / Σ_j (W_j / T_j)

Fixed strategies use a constant (EV, DC, BESS) split.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from ffrsim.core.coordination.models import ParticipationWeights, check_weight_triple
from ffrsim.core.errors import ModelConfigurationError

if TYPE_CHECKING:
    from ffrsim.core.coordination.models import StrategyConfig, StrategyKind, Triple
    from ffrsim.core.resources.models import DataCenterModel, DataCenterParams

DEFAULT_FIXED_WEIGHTS: dict[str, Triple] = {
    "bess_dominant": (0.2, 0.2, 0.6),
    "dc_dominant": (0.2, 0.6, 0.2),
    "ev_dominant": (0.6, 0.2, 0.2),
}


def adaptive_weights(capacities: Triple, time_constants: Triple) -> ParticipationWeights:
    """Speed-capacity weights; all-zero capacities yield :meth:`ParticipationWeights.none`.

    Raises:
        ModelConfigurationError: On a non-positive time constant or negative capacity.
    """
    if any(t <= 0 for t in time_constants):
        raise ModelConfigurationError("time_constants", f"must all be > 0, got {time_constants}")
    if any(w < 0 for w in capacities):
        raise ModelConfigurationError("capacities", f"must all be >= 0, got {capacities}")

    ratios = [w / t for w, t in zip(capacities, time_constants, strict=True)]
    total = sum(ratios)
    if total <= 0:
        return ParticipationWeights.none()
    alphas = [r / total for r in ratios]
    norm = sum(alphas)
    return ParticipationWeights(alphas[0] / norm, alphas[1] / norm, alphas[2] / norm)


def fixed_weights(
    kind: StrategyKind,
    custom: Triple | None = None,
    config: StrategyConfig | None = None,
) -> ParticipationWeights:
    """Weights of a fixed strategy.

    The dominant splits come from *config* when given, else the built-in
    defaults.  ``custom`` requires *custom* (or ``config.fixed_weights``).

    Raises:
        ModelConfigurationError: For ``adaptive``, a missing custom triple, or
            weights that do not sum to 1.
    """
    if kind == "adaptive":
        raise ModelConfigurationError("kind", "adaptive weights are not fixed")
    if kind == "custom":
        values = custom if custom is not None else (config.fixed_weights if config else None)
        if values is None:
            raise ModelConfigurationError("fixed_weights", "required for the custom strategy")
    elif config is not None:
        values = getattr(config, kind)
    else:
        values = DEFAULT_FIXED_WEIGHTS[kind]
    check_weight_triple(values, kind)
    return ParticipationWeights.from_tuple(values)


def blended_dc_time_constant(dc: DataCenterParams | DataCenterModel) -> float:
    """Capacity-weighted DC response time ``(W_UPS·T_UPS + W_IT·T_IT) / (W_UPS + W_IT)``.

    Raises:
        ModelConfigurationError: If the data center has no FFR capacity at all.
    """
    total = dc.ups_capacity_w_ups + dc.it_flex_w_it
    if total <= 0:
        raise ModelConfigurationError("dc", "W_UPS + W_IT must be > 0 to derive T_DC")
    return (dc.ups_capacity_w_ups * dc.ups_delay + dc.it_flex_w_it * dc.it_delay_t_it) / total
