"""Cross-strategy comparison of the case matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from ffrsim.core.scenario.batch import MATRIX_STRATEGIES, run_matrix
from ffrsim.core.scenario.models import CASE_IDS

if TYPE_CHECKING:
    from ffrsim.core.coordination.models import StrategyKind
    from ffrsim.core.scenario.batch import BatchCell
    from ffrsim.core.scenario.models import MetricsRecord, ScenarioConfig

_INF = float("inf")


@dataclass(frozen=True, slots=True)
class StrategyComparison:
    """Metrics matrix keyed by (strategy, case) plus the Case-4 verdicts.

    ``adaptive_dominates`` holds when the adaptive Case-4 run has a nadir at
    least as high, and a recovery at least as fast, as every fixed strategy.
    """

    metrics: dict[tuple[StrategyKind, int], MetricsRecord]
    cells: tuple[BatchCell, ...]
    adaptive_dominates: bool
    deepest_fixed: StrategyKind | None

    def get(self, strategy: StrategyKind, case_id: int) -> MetricsRecord | None:
        return self.metrics.get((strategy, case_id))


def _recovery_key(record: MetricsRecord) -> float:
    return record.recovery_time_s if record.recovery_time_s is not None else _INF


def summarize(cells: list[BatchCell], case_id: int = 4) -> StrategyComparison:
    """Build a :class:`StrategyComparison` from already-run *cells*."""
    metrics = {
        (cell.strategy, cell.case_id): cell.result.metrics
        for cell in cells
        if cell.result is not None
    }
    fixed = {
        s: metrics[(s, case_id)]
        for s in MATRIX_STRATEGIES
        if s != "adaptive" and (s, case_id) in metrics
    }
    adaptive = metrics.get(("adaptive", case_id))

    dominates = adaptive is not None and all(
        adaptive.nadir_hz >= rec.nadir_hz and _recovery_key(adaptive) <= _recovery_key(rec)
        for rec in fixed.values()
    )
    deepest = min(fixed, key=lambda s: fixed[s].nadir_hz) if fixed else None
    return StrategyComparison(
        metrics=metrics,
        cells=tuple(cells),
        adaptive_dominates=dominates,
        deepest_fixed=deepest,
    )


def compare_strategies(config: ScenarioConfig, jobs: int = 1) -> StrategyComparison:
    """Run the 4 × 4 matrix and compare the strategies on Case 4."""
    return summarize(run_matrix(config, jobs, MATRIX_STRATEGIES, CASE_IDS))
