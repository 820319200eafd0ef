"""Tests for the center-of-inertia frequency."""

import pytest

from ffrsim.core.errors import NoInertiaError
from ffrsim.core.grid.coi import coi_frequency, state_coi_frequency
from ffrsim.core.grid.models import GridConfig, GridState


class TestCoiFrequency:
    def test_symmetric_deviations_cancel(self) -> None:
        assert coi_frequency([(5000.0, 0.1), (5000.0, -0.1)], 60.0) == pytest.approx(60.0)

    def test_single_generator(self) -> None:
        assert coi_frequency([(1000.0, -0.3)], 60.0) == pytest.approx(59.7)

    def test_inertia_weighting(self) -> None:
        f = coi_frequency([(10.0 * 1000.0, -0.3), (5.0 * 1000.0, 0.0)], 60.0)
        assert f == pytest.approx(59.8)

    def test_empty_set_raises(self) -> None:
        with pytest.raises(NoInertiaError):
            coi_frequency([], 60.0)

    def test_zero_weight_raises(self) -> None:
        with pytest.raises(NoInertiaError):
            coi_frequency([(0.0, -0.1)], 60.0)


class TestStateCoiFrequency:
    def test_uniform_state(self) -> None:
        state = GridState.initial(GridConfig())
        assert state_coi_frequency(state) == pytest.approx(60.0)
