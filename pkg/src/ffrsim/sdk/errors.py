"""SDK error types.

Every :class:`ConfigError` carries the process exit code the CLI returns
for it, plus whatever location information was available.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from pathlib import Path


class ConfigError(Exception):
    """Raised when a configuration file cannot be turned into a valid document."""

    exit_code: int = 13

    def __init__(
        self,
        message: str,
        *,
        path: Path | None = None,
        line: int | None = None,
        field: str | None = None,
    ) -> None:
        self.message = message
        self.path = path
        self.line = line
        self.field = field
        super().__init__(self.diagnostic())

    def diagnostic(self) -> str:
        """``path:line: [field] message`` with the unknown parts left out."""
        where = ""
        if self.path is not None:
            where = str(self.path)
            if self.line is not None:
                where += f":{self.line}"
            where += ": "
        field = f"{self.field}: " if self.field else ""
        return f"{where}{field}{self.message}"


class ConfigFileNotFoundError(ConfigError):
    exit_code = 10


class ConfigSyntaxError(ConfigError):
    """Malformed JSON/YAML, or a document that is not a mapping."""

    exit_code = 11


class UnknownConfigKeyError(ConfigError):
    exit_code = 12


class ConfigValueError(ConfigError):
    """A value is missing, mistyped or out of range."""

    exit_code = 13
