"""Tests for the strategy configuration section."""

import pytest
from pydantic import ValidationError

from ffrsim.core.coordination.models import ParticipationWeights, StrategyConfig


class TestStrategyConfig:
    def test_defaults(self) -> None:
        config = StrategyConfig()
        assert config.kind == "adaptive"
        assert config.update_interval == 0.01
        assert config.capacity_model == "energy"

    def test_custom_requires_fixed_weights(self) -> None:
        with pytest.raises(ValidationError, match="fixed_weights"):
            StrategyConfig(kind="custom")

    def test_bad_split_rejected(self) -> None:
        with pytest.raises(ValidationError, match="sum to 1"):
            StrategyConfig(fixed_weights=(0.5, 0.5, 0.1))

    def test_negative_weight_rejected(self) -> None:
        with pytest.raises(ValidationError):
            StrategyConfig(ev_dominant=(1.2, -0.1, -0.1))

    def test_unknown_kind_rejected(self) -> None:
        with pytest.raises(ValidationError):
            StrategyConfig.model_validate({"kind": "pv_dominant"})


class TestParticipationWeights:
    def test_round_trip_tuple(self) -> None:
        w = ParticipationWeights.from_tuple((0.2, 0.3, 0.5))
        assert w.as_tuple() == (0.2, 0.3, 0.5)
        assert w.total == pytest.approx(1.0)
        assert not w.is_null
