"""ffrsim SDK: configuration documents and their loader."""

from ffrsim.sdk.errors import (
    ConfigError,
    ConfigFileNotFoundError,
    ConfigSyntaxError,
    ConfigValueError,
    UnknownConfigKeyError,
)
from ffrsim.sdk.loader import ConfigLoader, apply_overrides, parse_config
from ffrsim.sdk.models import ConfigDocument

__all__ = [
    "ConfigDocument",
    "ConfigError",
    "ConfigFileNotFoundError",
    "ConfigLoader",
    "ConfigSyntaxError",
    "ConfigValueError",
    "UnknownConfigKeyError",
    "apply_overrides",
    "parse_config",
]
