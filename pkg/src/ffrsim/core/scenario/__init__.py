"""Scenario engine: cases, simulation loop, metrics and the strategy matrix."""

from ffrsim.core.scenario.batch import MATRIX_STRATEGIES, BatchCell, run_cell, run_matrix
from ffrsim.core.scenario.cases import CASE_TITLES, build_case
from ffrsim.core.scenario.compare import StrategyComparison, compare_strategies, summarize
from ffrsim.core.scenario.metrics import compute_metrics, ffr_energy, recovery_time, windowed_rocof
from ffrsim.core.scenario.models import (
    CASE_IDS,
    SERIES_COLUMNS,
    DisturbanceConfig,
    MetricsRecord,
    MetricsSettings,
    ResourceMask,
    RunResult,
    Scenario,
    ScenarioConfig,
    SolverSettings,
    TimeSeries,
)
from ffrsim.core.scenario.runner import build_fleet, run_scenario

__all__ = [
    "CASE_IDS",
    "CASE_TITLES",
    "MATRIX_STRATEGIES",
    "SERIES_COLUMNS",
    "BatchCell",
    "DisturbanceConfig",
    "MetricsRecord",
    "MetricsSettings",
    "ResourceMask",
    "RunResult",
    "Scenario",
    "ScenarioConfig",
    "SolverSettings",
    "StrategyComparison",
    "TimeSeries",
    "build_case",
    "build_fleet",
    "compare_strategies",
    "compute_metrics",
    "ffr_energy",
    "recovery_time",
    "run_cell",
    "run_matrix",
    "run_scenario",
    "summarize",
    "windowed_rocof",
]
