"""Reporting error types."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from pathlib import Path


class ReportingError(Exception):
    """Base error for output generation."""

    exit_code: int = 30


class OutputWriteError(ReportingError):
    """An output file could not be written."""

    def __init__(self, path: Path, detail: str) -> None:
        self.path = path
        self.detail = detail
        super().__init__(f"Cannot write {path}: {detail}")
