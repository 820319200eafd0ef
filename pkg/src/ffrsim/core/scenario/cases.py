"""The four comparison cases.

1. No FFR: every resource disabled.
2. EV only: the fleet takes the whole allocation (α_EV = 1).
3. EV + data center: the adaptive rule restricted to those two (BESS
   capacity seen as 0).
4. EV + data center + BESS under the requested strategy.
"""

from __future__ import annotations

from dataclasses import replace
from typing import TYPE_CHECKING

from ffrsim.core.coordination.allocation import strategy_for
from ffrsim.core.coordination.models import ParticipationWeights
from ffrsim.core.errors import ModelConfigurationError
from ffrsim.core.scenario.models import CASE_IDS, ResourceMask, Scenario

if TYPE_CHECKING:
    from ffrsim.core.coordination.models import StrategyKind
    from ffrsim.core.scenario.models import ScenarioConfig

CASE_TITLES: dict[int, str] = {
    1: "No FFR",
    2: "EV only",
    3: "EV + data center",
    4: "EV + data center + BESS (coordinated)",
}

_MASKS: dict[int, ResourceMask] = {
    1: ResourceMask.none(),
    2: ResourceMask(ev=True, dc=False, bess=False),
    3: ResourceMask(ev=True, dc=True, bess=False),
    4: ResourceMask(),
}


def build_case(
    case_id: int, config: ScenarioConfig, kind: StrategyKind | None = None
) -> Scenario:
    """Build the runnable scenario for *case_id* under strategy *kind*.

    *kind* defaults to ``config.strategy.kind``.

    Raises:
        ModelConfigurationError: If *case_id* is not 1..4 or the strategy is invalid.
    """
    if case_id not in CASE_IDS:
        raise ModelConfigurationError("case", f"must be one of {CASE_IDS}, got {case_id}")

    strategy = strategy_for(kind, config.strategy, config.resources)
    if case_id == 2:
        strategy = replace(strategy, kind="custom", fixed=ParticipationWeights(1.0, 0.0, 0.0))
    elif case_id == 3:
        strategy = replace(strategy, kind="adaptive", fixed=None)

    return Scenario(
        case_id=case_id,
        grid=config.grid,
        resources=config.resources,
        mask=_MASKS[case_id],
        strategy=strategy,
        disturbance=config.disturbance.to_event(),
        solver=config.solver,
        metrics=config.metrics,
        log_weights=config.strategy.log_weights,
    )
