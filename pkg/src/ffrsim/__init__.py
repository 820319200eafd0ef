"""ffrsim: coordinated fast frequency response simulator."""

from __future__ import annotations

from typing import TYPE_CHECKING

__version__ = "0.1.0"

if TYPE_CHECKING:
    from ffrsim.core.scenario.runner import run_scenario as run_scenario
    from ffrsim.sdk.loader import ConfigLoader as ConfigLoader
    from ffrsim.sdk.loader import parse_config as parse_config

_LAZY_EXPORTS = {
    "ConfigLoader": "ffrsim.sdk.loader",
    "parse_config": "ffrsim.sdk.loader",
    "run_scenario": "ffrsim.core.scenario.runner",
}


def __getattr__(name: str) -> object:
    module_path = _LAZY_EXPORTS.get(name)
    if module_path is not None:
        import importlib

        mod = importlib.import_module(module_path)
        return getattr(mod, name)
    raise AttributeError(f"module 'ffrsim' has no attribute {name!r}")
