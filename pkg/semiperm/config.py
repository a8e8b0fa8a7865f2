"""
This module provides the settings object holding every tunable bound of the library.

Settings are resolved from the dataclass defaults, then an optional YAML file, then
``SEMIPERM_*`` environment variables, then explicit overrides passed to :func:`configure`.
"""

import dataclasses
import logging
import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any

import yaml

from .errors import SemigroupError

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "SEMIPERM_CONFIG"
DEFAULT_CONFIG_FILE = "semiperm.yaml"
ENV_PREFIX = "SEMIPERM_"


@dataclass(frozen=True)
class Settings:
    """Resource caps and behavior flags shared by all operations."""

    max_lattice_size: int = 100000
    max_group_order: int = 24
    max_gset_points: int = 4096
    max_census_order: int = 5
    max_canonical_order: int = 6
    archimedean_with_identity: bool = False
    parallel_width: int = 1
    check_all_representatives: bool = True


_settings: Settings | None = None


def _coerce(name: str, raw: Any) -> Any:
    """Convert a raw YAML or environment value to the type of the named field."""
    kind = {f.name: f.type for f in fields(Settings)}[name]
    if kind in (bool, "bool"):
        if isinstance(raw, bool):
            return raw
        text = str(raw).strip().lower()
        if text in ("1", "true", "yes", "on"):
            return True
        if text in ("0", "false", "no", "off"):
            return False
        raise SemigroupError(f"Setting {name!r} expects a boolean, got {raw!r}")

    try:
        value = int(raw)
    except (TypeError, ValueError) as err:
        raise SemigroupError(f"Setting {name!r} expects an integer, got {raw!r}") from err
    if value < 1:
        raise SemigroupError(f"Setting {name!r} must be positive, got {value}")
    return value


def _validated(values: dict[str, Any], source: str) -> dict[str, Any]:
    known = {f.name for f in fields(Settings)}
    unknown = sorted(set(values) - known)
    if unknown:
        raise SemigroupError(f"Unknown settings in {source}: {', '.join(unknown)}")
    return {name: _coerce(name, raw) for name, raw in values.items()}


def load_settings(path: str | Path | None = None) -> Settings:
    """
    Build a Settings object from a YAML file and the environment.

    Args:
        path: Optional YAML file; defaults to $SEMIPERM_CONFIG or ./semiperm.yaml when present

    Returns:
        The resolved settings

    Raises:
        SemigroupError: If the file is malformed or holds unknown keys
    """
    values: dict[str, Any] = {}

    # Configuration file, if any
    candidate = path or os.environ.get(CONFIG_ENV_VAR)
    if candidate is None and Path(DEFAULT_CONFIG_FILE).is_file():
        candidate = DEFAULT_CONFIG_FILE
    if candidate is not None:
        try:
            data = yaml.safe_load(Path(candidate).read_text(encoding="utf-8")) or {}
        except (OSError, yaml.YAMLError) as err:
            raise SemigroupError(f"Cannot read settings file {candidate}: {err}") from err
        if not isinstance(data, dict):
            raise SemigroupError(f"Settings file {candidate} must hold a mapping")
        values.update(_validated(data, str(candidate)))
        logger.debug("Loaded settings from %s", candidate)

    # Environment overrides
    for f in fields(Settings):
        raw = os.environ.get(ENV_PREFIX + f.name.upper())
        if raw is not None:
            values[f.name] = _coerce(f.name, raw)

    return Settings(**values)


def get_settings() -> Settings:
    """Return the process-wide settings, loading them on first use."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def configure(**overrides: Any) -> Settings:
    """
    Replace selected settings for the rest of the process.

    Args:
        **overrides: Field names and their new values

    Returns:
        The updated settings
    """
    global _settings
    _settings = dataclasses.replace(get_settings(), **_validated(overrides, "configure()"))
    return _settings


def reset_settings() -> None:
    """Forget the cached settings so the next access reloads them."""
    global _settings
    _settings = None
