"""Tests for ``ffrsim batch``."""

from __future__ import annotations

import csv
import json
from typing import TYPE_CHECKING

from click.testing import CliRunner

from ffrsim.cli import main

if TYPE_CHECKING:
    from pathlib import Path

_SHORT = {
    "disturbance": {"time": 1.0},
    "solver": {"dt": 0.002, "duration": 6.0},
}


def _summary(path: Path) -> list[dict[str, str]]:
    with path.open(newline="") as handle:
        return list(csv.DictReader(handle))


class TestBatchCommand:
    def test_matrix_outputs(self, tmp_path: Path) -> None:
        config = tmp_path / "config.json"
        config.write_text(json.dumps(_SHORT))
        out = tmp_path / "out"

        result = CliRunner().invoke(main, ["batch", "--config", str(config), "--out", str(out)])

        assert result.exit_code == 0, result.output
        cells = [p for p in out.iterdir() if p.is_dir()]
        assert len(cells) == 16
        rows = _summary(out / "summary.csv")
        assert len(rows) == 16
        assert all(row["status"] == "ok" for row in rows)
        case_one = {
            tuple(v for k, v in row.items() if k != "strategy")
            for row in rows
            if row["case"] == "1"
        }
        assert len(case_one) == 1
        for name in ("fig5.svg", "fig6.svg", "fig7.svg", "fig8.svg"):
            assert (out / name).exists()
        assert (out / "adaptive_case4" / "metrics.json").exists()

    def test_jobs_do_not_change_summary(self, tmp_path: Path) -> None:
        config = tmp_path / "config.json"
        config.write_text(json.dumps(_SHORT))
        runner = CliRunner()
        for jobs in ("1", "3"):
            result = runner.invoke(
                main,
                [
                    "batch", "--config", str(config), "--out", str(tmp_path / jobs),
                    "--jobs", jobs, "--no-plots",
                ],
            )
            assert result.exit_code == 0, result.output
        assert (tmp_path / "1" / "summary.csv").read_bytes() == (
            tmp_path / "3" / "summary.csv"
        ).read_bytes()

    def test_failed_cells(self, tmp_path: Path) -> None:
        config = tmp_path / "config.json"
        config.write_text(
            json.dumps({**_SHORT, "grid": {"generators": [{"id": "G1", "rated_power": 900.0}]}})
        )
        out = tmp_path / "out"

        result = CliRunner().invoke(
            main, ["batch", "--config", str(config), "--out", str(out), "--no-plots"]
        )

        assert result.exit_code == 20
        rows = _summary(out / "summary.csv")
        assert len(rows) == 16
        assert all(row["status"] == "failed" for row in rows)
