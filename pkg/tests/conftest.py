"""Shared fixtures: full default-scenario runs are simulated once per session."""

from __future__ import annotations

import pytest

from ffrsim.core.scenario.cases import build_case
from ffrsim.core.scenario.models import RunResult, ScenarioConfig
from ffrsim.core.scenario.runner import run_scenario


@pytest.fixture(scope="session")
def default_config() -> ScenarioConfig:
    return ScenarioConfig()


@pytest.fixture(scope="session")
def case_runs(default_config: ScenarioConfig) -> dict[int, RunResult]:
    """Cases 1-4 under the adaptive strategy with every default."""
    return {
        case_id: run_scenario(build_case(case_id, default_config, "adaptive"))
        for case_id in (1, 2, 3, 4)
    }


@pytest.fixture
def short_config() -> ScenarioConfig:
    """A coarse, 8-second scenario for tests that only need the loop to run."""
    return ScenarioConfig.model_validate(
        {
            "disturbance": {"time": 1.0},
            "solver": {"dt": 0.002, "duration": 8.0, "sample_stride": 0.01},
        }
    )
