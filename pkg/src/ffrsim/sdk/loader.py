"""Configuration loading for the ffrsim SDK.

JSON is the normative format; ``.yaml``/``.yml`` files are read with
:func:`yaml.safe_load`.  Validation failures are mapped onto the
:mod:`ffrsim.sdk.errors` hierarchy with the offending field path and, when
it can be found, the line it appears on.
"""

from __future__ import annotations

import hashlib
import json
import re
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from ffrsim.sdk.errors import (
    ConfigError,
    ConfigFileNotFoundError,
    ConfigSyntaxError,
    ConfigValueError,
    UnknownConfigKeyError,
)
from ffrsim.sdk.models import ConfigDocument

_YAML_SUFFIXES = frozenset({".yaml", ".yml"})


def _field_path(loc: tuple[int | str, ...]) -> str:
    return ".".join(str(part) for part in loc)


def _locate(raw: str, loc: tuple[int | str, ...]) -> int | None:
    """Best-effort 1-based line of the last string key in *loc*."""
    keys = [part for part in loc if isinstance(part, str)]
    if not keys or not raw:
        return None
    pattern = re.compile(rf"""(["']?){re.escape(keys[-1])}\1\s*:""")
    for number, text in enumerate(raw.splitlines(), start=1):
        if pattern.search(text):
            return number
    return None


def config_error_from_validation(
    exc: ValidationError, *, path: Path | None = None, raw: str = ""
) -> ConfigError:
    """Translate the first pydantic error of *exc* into a :class:`ConfigError`."""
    errors = exc.errors()
    unknown = [e for e in errors if e["type"] == "extra_forbidden"]
    first = unknown[0] if unknown else errors[0]
    loc = tuple(first["loc"])
    field = _field_path(loc) or None
    line = _locate(raw, loc)
    if unknown:
        return UnknownConfigKeyError("unknown key", path=path, line=line, field=field)
    message = str(first["msg"]).removeprefix("Value error, ")
    return ConfigValueError(message, path=path, line=line, field=field)


class ConfigLoader:
    """Load and validate a configuration file into a :class:`ConfigDocument`."""

    def __init__(self, path: Path) -> None:
        self._path = path
        self._raw = b""

    @property
    def path(self) -> Path:
        return self._path

    @property
    def raw_hash(self) -> str:
        """SHA-256 of the file bytes read by the last :meth:`load`."""
        return hashlib.sha256(self._raw).hexdigest()

    def load(self) -> ConfigDocument:
        """Read, parse and validate the file.

        Raises:
            ConfigFileNotFoundError: If the file does not exist or cannot be read.
            ConfigSyntaxError: On malformed JSON/YAML or a non-mapping document.
            UnknownConfigKeyError: On a key the schema does not define.
            ConfigValueError: On a missing, mistyped or out-of-range value.
        """
        try:
            self._raw = self._path.read_bytes()
        except FileNotFoundError as exc:
            raise ConfigFileNotFoundError("file not found", path=self._path) from exc
        except OSError as exc:
            raise ConfigFileNotFoundError(f"cannot read file: {exc}", path=self._path) from exc

        try:
            text = self._raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ConfigSyntaxError(f"not UTF-8 text: {exc}", path=self._path) from exc

        data = self._parse(text)
        if not isinstance(data, dict):
            raise ConfigSyntaxError("configuration must be a mapping", path=self._path)

        try:
            return ConfigDocument.model_validate(data)
        except ValidationError as exc:
            raise config_error_from_validation(exc, path=self._path, raw=text) from exc

    def _parse(self, text: str) -> Any:
        if self._path.suffix.lower() in _YAML_SUFFIXES:
            try:
                return yaml.safe_load(text)
            except yaml.YAMLError as exc:
                mark = getattr(exc, "problem_mark", None)
                line = mark.line + 1 if mark is not None else None
                raise ConfigSyntaxError(
                    f"YAML parse error: {exc}", path=self._path, line=line
                ) from exc
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigSyntaxError(
                f"JSON parse error: {exc.msg}", path=self._path, line=exc.lineno
            ) from exc


def parse_config(path: str | Path) -> ConfigDocument:
    """Load *path* with :class:`ConfigLoader`."""
    return ConfigLoader(Path(path)).load()


def apply_overrides(
    document: ConfigDocument, *, dt: float | None = None, duration: float | None = None
) -> ConfigDocument:
    """Apply command-line solver overrides and re-validate.

    Raises:
        ConfigValueError: If the overridden document is invalid.
    """
    try:
        return document.with_overrides(dt=dt, duration=duration)
    except ValidationError as exc:
        error = config_error_from_validation(exc)
        raise ConfigValueError(error.message, field=error.field) from exc
