"""Coordinator: participation weights and droop-command allocation."""

from ffrsim.core.coordination.allocation import (
    AllocationCommand,
    Coordinator,
    WeightsTrace,
    aggregate_gain,
    allocate,
    strategy_for,
    weights_trace,
)
from ffrsim.core.coordination.models import (
    STRATEGY_KINDS,
    AllocationStrategy,
    ParticipationWeights,
    StrategyConfig,
    StrategyKind,
)
from ffrsim.core.coordination.weights import (
    DEFAULT_FIXED_WEIGHTS,
    adaptive_weights,
    blended_dc_time_constant,
    fixed_weights,
)

__all__ = [
    "DEFAULT_FIXED_WEIGHTS",
    "STRATEGY_KINDS",
    "AllocationCommand",
    "AllocationStrategy",
    "Coordinator",
    "ParticipationWeights",
    "StrategyConfig",
    "StrategyKind",
    "WeightsTrace",
    "adaptive_weights",
    "aggregate_gain",
    "allocate",
    "blended_dc_time_constant",
    "fixed_weights",
    "strategy_for",
    "weights_trace",
]
