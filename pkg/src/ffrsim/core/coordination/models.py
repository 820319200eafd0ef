"""Participation weights, strategy configuration and the resolved allocation strategy."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ffrsim.core.errors import ModelConfigurationError
from ffrsim.core.resources.models import CapacityModel  # noqa: TC001

StrategyKind = Literal["adaptive", "bess_dominant", "dc_dominant", "ev_dominant", "custom"]

STRATEGY_KINDS: tuple[StrategyKind, ...] = (
    "adaptive",
    "bess_dominant",
    "dc_dominant",
    "ev_dominant",
    "custom",
)

WEIGHT_SUM_TOLERANCE = 1e-9

Triple = tuple[float, float, float]


def check_weight_triple(weights: Triple, name: str) -> None:
    """Raise :class:`ModelConfigurationError` unless *weights* are ≥ 0 and sum to 1."""
    if any(w < 0 for w in weights):
        raise ModelConfigurationError(name, f"weights must be >= 0, got {weights}")
    total = sum(weights)
    if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
        raise ModelConfigurationError(name, f"weights must sum to 1, got {total:.12g}")


@dataclass(frozen=True, slots=True)
class ParticipationWeights:
    """α for (EV, DC, BESS).  All-zero is the legal "no FFR" sentinel."""

    alpha_ev: float
    alpha_dc: float
    alpha_bess: float

    @classmethod
    def none(cls) -> ParticipationWeights:
        return cls(0.0, 0.0, 0.0)

    @classmethod
    def from_tuple(cls, values: Triple) -> ParticipationWeights:
        return cls(*values)

    def as_tuple(self) -> Triple:
        return (self.alpha_ev, self.alpha_dc, self.alpha_bess)

    @property
    def total(self) -> float:
        return self.alpha_ev + self.alpha_dc + self.alpha_bess

    @property
    def is_null(self) -> bool:
        return self.alpha_ev == 0 and self.alpha_dc == 0 and self.alpha_bess == 0


class StrategyConfig(BaseModel):
    """The ``strategy`` section of a scenario configuration.

    The ``*_dominant`` triples are the (EV, DC, BESS) splits of the fixed
    strategies; ``fixed_weights`` is the split of the ``custom`` strategy.
    ``t_dc_override`` replaces the blended data-center response time fed to
    the adaptive rule.  ``t_bess_response`` is the BESS response time the
    adaptive rule uses; it covers the converter ramp as well as its lag, and
    ``None`` falls back to the converter lag T_B.
    """

    model_config = ConfigDict(extra="forbid")

    kind: StrategyKind = "adaptive"
    bess_dominant: Triple = (0.2, 0.2, 0.6)
    dc_dominant: Triple = (0.2, 0.6, 0.2)
    ev_dominant: Triple = (0.6, 0.2, 0.2)
    fixed_weights: Triple | None = None
    t_dc_override: float | None = Field(default=None, gt=0, description="T_DC (s).")
    t_bess_response: float | None = Field(default=0.06, gt=0, description="T_BESS (s).")
    gain_cap: float | None = Field(default=None, gt=0, description="Cap on Σα·k (MW/Hz).")
    update_interval: float = Field(default=0.01, gt=0, description="Weight refresh period (s).")
    capacity_model: CapacityModel = "energy"
    log_weights: bool = True

    @model_validator(mode="after")
    def _validate_weights(self) -> StrategyConfig:
        try:
            for name in ("bess_dominant", "dc_dominant", "ev_dominant"):
                check_weight_triple(getattr(self, name), name)
            if self.fixed_weights is not None:
                check_weight_triple(self.fixed_weights, "fixed_weights")
        except ModelConfigurationError as exc:
            raise ValueError(str(exc)) from exc
        if self.kind == "custom" and self.fixed_weights is None:
            msg = "strategy kind 'custom' requires fixed_weights"
            raise ValueError(msg)
        return self


@dataclass(frozen=True, slots=True)
class AllocationStrategy:
    """A resolved strategy: fixed weights (or ``None`` for adaptive) plus T_i and limits."""

    kind: StrategyKind
    time_constants: Triple
    fixed: ParticipationWeights | None = None
    gain_cap: float | None = None
    update_interval: float = 0.01
    capacity_model: CapacityModel = "energy"

    def __post_init__(self) -> None:
        if any(t <= 0 for t in self.time_constants):
            raise ModelConfigurationError(
                "time_constants", f"must all be > 0, got {self.time_constants}"
            )
        if self.kind == "adaptive":
            if self.fixed is not None:
                raise ModelConfigurationError("fixed", "adaptive strategy takes no fixed weights")
        elif self.fixed is None:
            raise ModelConfigurationError("fixed", f"strategy {self.kind!r} needs fixed weights")
        else:
            check_weight_triple(self.fixed.as_tuple(), self.kind)
        if self.gain_cap is not None and self.gain_cap <= 0:
            raise ModelConfigurationError("gain_cap", f"must be > 0, got {self.gain_cap}")
        if self.update_interval <= 0:
            raise ModelConfigurationError(
                "update_interval", f"must be > 0, got {self.update_interval}"
            )

    @property
    def is_adaptive(self) -> bool:
        return self.kind == "adaptive"
