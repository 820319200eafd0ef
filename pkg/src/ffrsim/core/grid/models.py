"""Grid data models: generators, disturbance events and the COI grid state.

``Generator``, ``DisturbanceEvent`` and ``GridConfig`` are validated
configuration objects.  ``GridState`` is the immutable value advanced by
:func:`~ffrsim.core.grid.swing.swing_step` once per integrator step.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from pydantic import BaseModel, ConfigDict, Field, model_validator

#: Inertia constant shared by the default fleet.  After the default 40%
#: reduction and the loss of G1 it leaves M = 1724.14 MW·s/Hz on the 60 Hz base.
DEFAULT_INERTIA_H = 16.90333

_DEFAULT_RATINGS: tuple[tuple[str, float], ...] = (
    ("G1", 1000.0),
    ("G2", 600.0),
    ("G3", 650.0),
    ("G4", 650.0),
    ("G5", 500.0),
    ("G6", 650.0),
    ("G7", 560.0),
    ("G8", 540.0),
    ("G9", 800.0),
    ("G10", 150.0),
)


class Generator(BaseModel):
    """A synchronous machine seen through its inertia and governor."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    id: str = Field(..., min_length=1)
    rated_power: float = Field(..., gt=0, description="Machine rating (MVA).")
    inertia_h: float = Field(default=DEFAULT_INERTIA_H, gt=0, description="H_i (s).")
    governor_droop_r: float = Field(default=0.065, gt=0, description="Droop R (pu).")
    governor_time_const: float = Field(default=1.75, gt=0, description="Governor lag (s).")
    governor_limit: float = Field(
        default=0.45, gt=0, description="Governor output bound, fraction of rating."
    )
    online: bool = True


def default_generators() -> list[Generator]:
    """The ten-machine default fleet (6100 MVA in total)."""
    return [Generator(id=gid, rated_power=rating) for gid, rating in _DEFAULT_RATINGS]


class DisturbanceEvent(BaseModel):
    """A step loss of generation, optionally tripping a machine."""

    model_config = ConfigDict(frozen=True)

    trigger_time: float = Field(default=5.0, ge=0, description="Event time (s).")
    power_loss: float = Field(default=1000.0, ge=0, description="Lost generation (MW).")
    tripped_generator: str | None = "G1"


class GridConfig(BaseModel):
    """The ``grid`` section of a scenario configuration."""

    model_config = ConfigDict(extra="forbid")

    generators: list[Generator] = Field(default_factory=default_generators)
    damping_d: float = Field(default=28.0, ge=0, description="Load damping (MW/Hz).")
    secondary_gain: float = Field(
        default=1300.0, ge=0, description="Integral secondary-control gain (MW/Hz/s); 0 = off."
    )
    nominal_freq: float = Field(default=60.0, gt=0, description="f0 (Hz).")
    inertia_reduction: float = Field(
        default=0.4, ge=0, lt=1, description="Fraction of every H_i removed."
    )

    @model_validator(mode="after")
    def _validate_generators(self) -> GridConfig:
        if not self.generators:
            msg = "grid requires at least one generator"
            raise ValueError(msg)
        ids = [g.id for g in self.generators]
        if len(set(ids)) != len(ids):
            msg = "generator ids must be unique"
            raise ValueError(msg)
        return self


@dataclass(frozen=True, slots=True)
class GridState:
    """Uniform-frequency grid state at one instant.

    ``governor_power`` holds each machine's mechanical-power deviation (MW)
    in the same order as ``generators``; ``secondary_power`` is the output of
    the integral secondary control, which pulls Δf back to zero at
    ``secondary_gain`` MW per Hz·s.
    """

    time: float
    freq_dev: float
    nominal_freq: float
    damping_d: float
    generators: tuple[Generator, ...]
    governor_power: tuple[float, ...]
    inertia_scale: float = 1.0
    secondary_power: float = 0.0
    secondary_gain: float = 0.0

    @classmethod
    def initial(cls, config: GridConfig) -> GridState:
        """Equilibrium state at t = 0 for *config*."""
        gens = tuple(config.generators)
        return cls(
            time=0.0,
            freq_dev=0.0,
            nominal_freq=config.nominal_freq,
            damping_d=config.damping_d,
            generators=gens,
            governor_power=(0.0,) * len(gens),
            inertia_scale=1.0 - config.inertia_reduction,
            secondary_gain=config.secondary_gain,
        )

    @property
    def frequency(self) -> float:
        """Absolute COI frequency (Hz)."""
        return self.nominal_freq + self.freq_dev

    @property
    def online(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g.online)

    def effective_inertia(self, generator: Generator) -> float:
        """H_i after the configured inertia reduction."""
        return generator.inertia_h * self.inertia_scale

    def with_generator_offline(self, generator_id: str) -> GridState:
        """Return a copy with *generator_id* tripped and its governor state cleared."""
        gens: list[Generator] = []
        power: list[float] = []
        for gen, pg in zip(self.generators, self.governor_power, strict=True):
            if gen.id == generator_id and gen.online:
                gens.append(gen.model_copy(update={"online": False}))
                power.append(0.0)
            else:
                gens.append(gen)
                power.append(pg)
        return replace(self, generators=tuple(gens), governor_power=tuple(power))
