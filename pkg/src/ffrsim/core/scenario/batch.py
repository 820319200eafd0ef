"""Strategy × case matrix runner.

Cells run in a :class:`~concurrent.futures.ProcessPoolExecutor` when
``jobs > 1``; results are always returned in (strategy, case) order.  A
failing cell is recorded with its error and the remaining cells still run.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING

from ffrsim.core.errors import SimulationError
from ffrsim.core.scenario.cases import build_case
from ffrsim.core.scenario.models import CASE_IDS
from ffrsim.core.scenario.runner import run_scenario
from ffrsim.utils.telemetry import (
    ATTR_CASE,
    ATTR_CELLS,
    ATTR_FAILED_CELLS,
    ATTR_JOBS,
    ATTR_STRATEGY,
    get_tracer,
)

if TYPE_CHECKING:
    from ffrsim.core.coordination.models import StrategyKind
    from ffrsim.core.scenario.models import RunResult, ScenarioConfig

logger = logging.getLogger(__name__)
_tracer = get_tracer(__name__)

#: Matrix strategies, fixed allocations first.
MATRIX_STRATEGIES: tuple[StrategyKind, ...] = (
    "bess_dominant",
    "dc_dominant",
    "ev_dominant",
    "adaptive",
)


@dataclass(frozen=True, slots=True)
class BatchCell:
    """One (strategy, case) run: a result or the error that stopped it."""

    strategy: StrategyKind
    case_id: int
    result: RunResult | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.result is not None

    @property
    def name(self) -> str:
        return f"{self.strategy}_case{self.case_id}"


def run_cell(config: ScenarioConfig, strategy: StrategyKind, case_id: int) -> BatchCell:
    """Build and run one cell, capturing simulation errors."""
    with _tracer.start_as_current_span("batch.cell") as span:
        span.set_attribute(ATTR_STRATEGY, strategy)
        span.set_attribute(ATTR_CASE, case_id)
        try:
            result = run_scenario(build_case(case_id, config, strategy))
        except SimulationError as exc:
            logger.warning("Cell %s/case %d failed: %s", strategy, case_id, exc)
            return BatchCell(strategy=strategy, case_id=case_id, error=str(exc))
    return BatchCell(strategy=strategy, case_id=case_id, result=result)


def run_matrix(
    config: ScenarioConfig,
    jobs: int = 1,
    strategies: tuple[StrategyKind, ...] = MATRIX_STRATEGIES,
    cases: tuple[int, ...] = CASE_IDS,
) -> list[BatchCell]:
    """Run every (strategy, case) combination; results ordered by strategy then case."""
    grid = [(s, c) for s in strategies for c in cases]
    with _tracer.start_as_current_span("batch.run") as span:
        span.set_attribute(ATTR_JOBS, jobs)
        span.set_attribute(ATTR_CELLS, len(grid))
        logger.info("Running %d cells with %d job(s)", len(grid), jobs)

        if jobs <= 1:
            cells = [run_cell(config, s, c) for s, c in grid]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [pool.submit(run_cell, config, s, c) for s, c in grid]
                cells = [future.result() for future in futures]

        failed = sum(1 for cell in cells if not cell.ok)
        span.set_attribute(ATTR_FAILED_CELLS, failed)
        if failed:
            logger.warning("%d of %d cells failed", failed, len(cells))
    return cells
