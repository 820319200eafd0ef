"""Pydantic model for the scenario configuration file consumed by ``ffrsim run``.

An empty document ``{}`` is the full default scenario: the ten-machine
grid, default EV/data-center/BESS parameters, the adaptive strategy and
Case 4.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from pydantic import Field

from ffrsim.core.scenario.models import ScenarioConfig


class ConfigDocument(ScenarioConfig):
    """Top-level configuration document."""

    version: str = "1"
    case: int = Field(default=4, ge=1, le=4, description="Case run by ``ffrsim run``.")

    def with_overrides(self, **solver: float | None) -> ConfigDocument:
        """Return a re-validated copy with the given ``solver`` fields replaced.

        ``None`` values are ignored.
        """
        updates = {k: v for k, v in solver.items() if v is not None}
        if not updates:
            return self
        data = self.model_dump(mode="json")
        data["solver"].update(updates)
        return ConfigDocument.model_validate(data)

    def canonical_json(self) -> str:
        """Fully defaulted document as key-sorted compact JSON."""
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))

    def config_hash(self) -> str:
        """SHA-256 of :meth:`canonical_json`."""
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()

    def pretty_json(self) -> str:
        data: Any = self.model_dump(mode="json")
        return json.dumps(data, indent=2, sort_keys=True)
