"""Scenario configuration, runnable scenarios and run results."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ffrsim.core.coordination.models import StrategyConfig
from ffrsim.core.errors import ModelConfigurationError
from ffrsim.core.grid.models import DisturbanceEvent, GridConfig
from ffrsim.core.resources.models import DEFAULT_CAPACITY_HORIZON, ResourcesConfig

if TYPE_CHECKING:
    from ffrsim.core.coordination.models import AllocationStrategy

FloatArray = npt.NDArray[np.float64]

CASE_IDS = (1, 2, 3, 4)

# Tolerance for "dt divides sample_stride".
_STRIDE_EPS = 1e-9


def _steps(length: float, dt: float) -> int:
    return round(length / dt)


def _divides(length: float, dt: float) -> bool:
    return abs(_steps(length, dt) * dt - length) <= _STRIDE_EPS * max(1.0, length)


class DisturbanceConfig(BaseModel):
    """The ``disturbance`` section: a step loss of generation."""

    model_config = ConfigDict(extra="forbid")

    enabled: bool = True
    time: float = Field(default=5.0, ge=0, description="Event time (s).")
    power_mw: float = Field(default=1000.0, ge=0, description="Lost generation (MW).")
    trip_generator: str | None = "G1"

    def to_event(self) -> DisturbanceEvent | None:
        if not self.enabled:
            return None
        return DisturbanceEvent(
            trigger_time=self.time,
            power_loss=self.power_mw,
            tripped_generator=self.trip_generator,
        )


class SolverSettings(BaseModel):
    """The ``solver`` section: integration step, horizon and output stride."""

    model_config = ConfigDict(extra="forbid")

    dt: float = Field(default=0.001, gt=0, description="Integrator step (s).")
    duration: float = Field(default=30.0, gt=0, description="Simulated time (s).")
    sample_stride: float = Field(default=0.01, gt=0, description="Output sample period (s).")
    capacity_horizon: float = Field(
        default=DEFAULT_CAPACITY_HORIZON, gt=0, description="Energy-limited capacity horizon (s)."
    )

    @model_validator(mode="after")
    def _validate_grid(self) -> SolverSettings:
        if self.sample_stride < self.dt or not _divides(self.sample_stride, self.dt):
            msg = f"sample_stride ({self.sample_stride}) must be a multiple of dt ({self.dt})"
            raise ValueError(msg)
        if not _divides(self.duration, self.dt):
            msg = f"duration ({self.duration}) must be a multiple of dt ({self.dt})"
            raise ValueError(msg)
        return self

    @property
    def n_steps(self) -> int:
        return _steps(self.duration, self.dt)

    @property
    def stride_steps(self) -> int:
        return _steps(self.sample_stride, self.dt)


class MetricsSettings(BaseModel):
    """The ``metrics`` section: windows used by :func:`compute_metrics`."""

    model_config = ConfigDict(extra="forbid")

    rocof_window: float = Field(default=0.5, gt=0, description="Sliding fit length (s).")
    rocof_span: float = Field(default=2.0, gt=0, description="Search span after the event (s).")
    recovery_band: float = Field(default=0.05, gt=0, description="Band around f_qss (Hz).")
    recovery_hold: float = Field(default=1.0, gt=0, description="Time to stay in band (s).")
    qss_window: float = Field(default=1.0, gt=0, description="Tail averaged for f_qss (s).")

    @model_validator(mode="after")
    def _validate_windows(self) -> MetricsSettings:
        if self.rocof_window > self.rocof_span:
            msg = "rocof_window cannot exceed rocof_span"
            raise ValueError(msg)
        return self


class ScenarioConfig(BaseModel):
    """Every section a scenario is built from."""

    model_config = ConfigDict(extra="forbid")

    grid: GridConfig = Field(default_factory=GridConfig)
    resources: ResourcesConfig = Field(default_factory=ResourcesConfig)
    strategy: StrategyConfig = Field(default_factory=StrategyConfig)
    disturbance: DisturbanceConfig = Field(default_factory=DisturbanceConfig)
    solver: SolverSettings = Field(default_factory=SolverSettings)
    metrics: MetricsSettings = Field(default_factory=MetricsSettings)

    @model_validator(mode="after")
    def _validate_cross_sections(self) -> ScenarioConfig:
        dist = self.disturbance
        if dist.enabled and dist.time >= self.solver.duration:
            msg = (
                f"solver.duration ({self.solver.duration}) must exceed "
                f"disturbance.time ({dist.time})"
            )
            raise ValueError(msg)
        ids = {g.id for g in self.grid.generators}
        if dist.trip_generator is not None and dist.trip_generator not in ids:
            msg = f"disturbance.trip_generator {dist.trip_generator!r} is not a grid generator"
            raise ValueError(msg)
        return self


@dataclass(frozen=True, slots=True)
class ResourceMask:
    """Which FFR resources take part in a scenario."""

    ev: bool = True
    dc: bool = True
    bess: bool = True

    @classmethod
    def none(cls) -> ResourceMask:
        return cls(ev=False, dc=False, bess=False)

    def as_tuple(self) -> tuple[bool, bool, bool]:
        return (self.ev, self.dc, self.bess)


@dataclass(frozen=True, slots=True)
class Scenario:
    """A fully resolved, runnable scenario."""

    case_id: int
    grid: GridConfig
    resources: ResourcesConfig
    mask: ResourceMask
    strategy: AllocationStrategy
    disturbance: DisturbanceEvent | None
    solver: SolverSettings
    metrics: MetricsSettings
    log_weights: bool = True

    def __post_init__(self) -> None:
        if self.disturbance is not None and self.solver.duration <= self.disturbance.trigger_time:
            raise ModelConfigurationError(
                "duration",
                f"must exceed the disturbance time {self.disturbance.trigger_time}",
            )

    @property
    def label(self) -> str:
        return f"case{self.case_id}-{self.strategy.kind}"

    @property
    def disturbance_time(self) -> float:
        return self.disturbance.trigger_time if self.disturbance is not None else 0.0


# CSV column order of a run's time series.
SERIES_COLUMNS: tuple[str, ...] = (
    "t_s",
    "f_hz",
    "p_ev_mw",
    "p_ups_mw",
    "p_it_mw",
    "p_bess_mw",
    "p_ffr_total_mw",
    "alpha_ev",
    "alpha_dc",
    "alpha_bess",
    "soc_ev",
    "soc_bess",
)


@dataclass(frozen=True, slots=True)
class TimeSeries:
    """Sampled trajectories of one run, one array per output column."""

    t: FloatArray
    f: FloatArray
    p_ev: FloatArray
    p_ups: FloatArray
    p_it: FloatArray
    p_bess: FloatArray
    p_ffr_total: FloatArray
    alpha_ev: FloatArray
    alpha_dc: FloatArray
    alpha_bess: FloatArray
    soc_ev: FloatArray
    soc_bess: FloatArray

    def __len__(self) -> int:
        return int(self.t.shape[0])

    @property
    def p_dc(self) -> FloatArray:
        return self.p_ups + self.p_it

    def columns(self) -> tuple[FloatArray, ...]:
        """Arrays in :data:`SERIES_COLUMNS` order."""
        return (
            self.t,
            self.f,
            self.p_ev,
            self.p_ups,
            self.p_it,
            self.p_bess,
            self.p_ffr_total,
            self.alpha_ev,
            self.alpha_dc,
            self.alpha_bess,
            self.soc_ev,
            self.soc_bess,
        )

    @classmethod
    def from_rows(cls, rows: list[tuple[float, ...]]) -> TimeSeries:
        """Build from row tuples laid out in :data:`SERIES_COLUMNS` order."""
        data = np.asarray(rows, dtype=np.float64).reshape(-1, len(SERIES_COLUMNS))
        return cls(*(np.ascontiguousarray(data[:, i]) for i in range(len(SERIES_COLUMNS))))


@dataclass(frozen=True, slots=True)
class MetricsRecord:
    """Frequency-performance summary of one run."""

    nadir_hz: float
    rocof_hz_per_s: float
    recovery_time_s: float | None
    max_ev_mw: float
    max_dc_mw: float
    max_bess_mw: float
    ffr_energy_mwh: float

    @property
    def recovered(self) -> bool:
        return self.recovery_time_s is not None

    def to_json_dict(self) -> dict[str, Any]:
        """The ``metrics.json`` document (``recovery_time_s`` is ``null`` if not recovered)."""
        return {
            "nadir_hz": self.nadir_hz,
            "rocof_hz_per_s": self.rocof_hz_per_s,
            "recovery_time_s": self.recovery_time_s,
            "max_power_mw": {
                "ev": self.max_ev_mw,
                "dc": self.max_dc_mw,
                "bess": self.max_bess_mw,
            },
            "ffr_energy_mwh": self.ffr_energy_mwh,
        }

    def summary_line(self) -> str:
        recovery = (
            f"{self.recovery_time_s:.2f} s" if self.recovery_time_s is not None else "not recovered"
        )
        return (
            f"nadir {self.nadir_hz:.4f} Hz | RoCoF {self.rocof_hz_per_s:.4f} Hz/s | "
            f"recovery {recovery} | max EV/DC/BESS {self.max_ev_mw:.1f}/{self.max_dc_mw:.1f}/"
            f"{self.max_bess_mw:.1f} MW | FFR energy {self.ffr_energy_mwh:.4f} MWh"
        )


@dataclass(frozen=True, slots=True)
class RunResult:
    """Output of :func:`~ffrsim.core.scenario.runner.run_scenario`."""

    scenario: Scenario
    series: TimeSeries
    metrics: MetricsRecord
    steps: int
    weights_logged: bool = True
