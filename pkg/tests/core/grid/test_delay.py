"""Tests for the transport delay line."""

import itertools

import pytest

from ffrsim.core.errors import ModelConfigurationError
from ffrsim.core.grid.delay import DelayLine


class TestDelayLine:
    def test_zero_delay_is_identity(self) -> None:
        line = DelayLine(delay=0.0, step=0.001)
        line.push(0.2)
        assert line.read() == 0.2

    def test_step_arrives_after_lag(self) -> None:
        line = DelayLine(delay=0.08, step=0.001)
        line.push(-0.2)
        reads: list[float] = [line.read()]
        for _ in range(80):
            line.push(0.0)
            reads.append(line.read())
        assert reads[:80] == [0.0] * 80
        assert reads[80] == -0.2

    def test_nearest_step_rounding(self) -> None:
        assert DelayLine(delay=0.0804, step=0.001).lag == DelayLine(delay=0.08, step=0.001).lag

    def test_fill_value_before_warm_up(self) -> None:
        line = DelayLine(delay=0.01, step=0.001, fill=0.5)
        line.push(1.0)
        assert line.read() == 0.5

    @pytest.mark.parametrize("lag", [0, 1, 2, 3, 4])
    def test_every_sequence_is_shifted_by_lag(self, lag: int) -> None:
        for sequence in itertools.product((-1.0, 0.0, 2.0), repeat=lag + 3):
            line = DelayLine(delay=lag * 0.01, step=0.01, fill=7.0)
            for k, value in enumerate(sequence):
                line.push(value)
                expected = sequence[k - lag] if k >= lag else 7.0
                assert line.read() == expected

    def test_read_at_interpolates_between_oldest_samples(self) -> None:
        line = DelayLine(delay=0.002, step=0.001)
        for value in (1.0, 3.0, 5.0):
            line.push(value)
        assert line.read_at(0.0, 9.0) == 1.0
        assert line.read_at(0.5, 9.0) == pytest.approx(2.0)
        assert line.read_at(1.0, 9.0) == pytest.approx(3.0)

    def test_read_at_zero_lag_returns_current(self) -> None:
        line = DelayLine(delay=0.0, step=0.001)
        line.push(1.0)
        assert line.read_at(0.5, -0.4) == -0.4

    def test_negative_delay_rejected(self) -> None:
        with pytest.raises(ModelConfigurationError):
            DelayLine(delay=-0.01, step=0.001)

    def test_non_positive_step_rejected(self) -> None:
        with pytest.raises(ModelConfigurationError):
            DelayLine(delay=0.01, step=0.0)
