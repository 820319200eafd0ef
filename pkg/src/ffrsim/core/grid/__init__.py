"""Grid dynamics: COI frequency, swing equation, governors and delay lines."""

from ffrsim.core.grid.coi import coi_frequency, state_coi_frequency
from ffrsim.core.grid.delay import DelayLine
from ffrsim.core.grid.integrate import rk4_step
from ffrsim.core.grid.models import (
    DEFAULT_INERTIA_H,
    DisturbanceEvent,
    Generator,
    GridConfig,
    GridState,
    default_generators,
)
from ffrsim.core.grid.swing import (
    Injection,
    apply_disturbance,
    coupled_step,
    kinetic_constant,
    swing_step,
)

__all__ = [
    "DEFAULT_INERTIA_H",
    "DelayLine",
    "DisturbanceEvent",
    "Generator",
    "GridConfig",
    "GridState",
    "Injection",
    "apply_disturbance",
    "coi_frequency",
    "coupled_step",
    "default_generators",
    "kinetic_constant",
    "rk4_step",
    "state_coi_frequency",
    "swing_step",
]
