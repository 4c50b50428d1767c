"""Run settings loading and merging."""

from __future__ import annotations

import logging
import os
import shutil
import sys
from collections.abc import Mapping
from dataclasses import dataclass
from dataclasses import fields as dc_fields
from importlib import resources
from pathlib import Path
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib  # type: ignore[import-not-found]  # not installed on 3.11+

from . import constants
from .constants import OUTPUT_FORMATS, ORDER_ENV, PROJECT_CONFIG_NAME, WORKERS_ENV

logger = logging.getLogger(__name__)


@dataclass
class RunSettings:
    """Defaults for every subcommand, merged from global + project files + env.

    CLI flags are applied by the caller and win over all of these.
    """

    order: int | None = None  # None = DEFAULT_ORDER_FACTOR * genus
    format: str = "json"
    workers: int = 1  # 1 = run suite checks inline
    genus: int = 2

    def order_for(self, genus: int) -> int:
        if self.order is not None:
            return self.order
        return constants.DEFAULT_ORDER_FACTOR * genus


_FIELD_TYPES: dict[str, type] = {"order": int, "format": str, "workers": int, "genus": int}
_KNOWN = frozenset(f.name for f in dc_fields(RunSettings))
_MINIMUM = {"order": 1, "workers": 1, "genus": 2}


def _ensure_global_config() -> None:
    """Auto-create default config.toml if missing (copy from vendored file)."""
    path = constants.GLOBAL_CONFIG_PATH
    if path.exists():
        return

    path.parent.mkdir(parents=True, exist_ok=True)
    with resources.files("wallcross.data").joinpath("config.toml").open("rb") as src:
        with open(path, "wb") as dst:
            shutil.copyfileobj(src, dst)
    logger.info(f"Created default config at {path}")


def load_settings(project_dir: Path) -> RunSettings:
    """Load and merge global config → project config → environment."""
    _ensure_global_config()
    settings = RunSettings()

    if constants.GLOBAL_CONFIG_PATH.exists():
        _merge_toml(settings, constants.GLOBAL_CONFIG_PATH)

    # Project config (overrides global)
    project_config = project_dir / PROJECT_CONFIG_NAME
    if project_config.exists():
        _merge_toml(settings, project_config)

    _merge_env(settings, os.environ)
    return settings


def _merge_toml(settings: RunSettings, path: Path) -> None:
    """Merge TOML file values into settings."""
    with open(path, "rb") as f:
        data = tomllib.load(f)

    _merge_dict(settings, data, str(path))


def _valid(key: str, value: Any) -> bool:
    expected = _FIELD_TYPES[key]
    # bool is an int subclass; reject it for numeric fields
    if expected is int and (isinstance(value, bool) or not isinstance(value, int)):
        return False
    if expected is str and not isinstance(value, str):
        return False
    if key == "format":
        return value in OUTPUT_FORMATS
    return key not in _MINIMUM or bool(value >= _MINIMUM[key])


def _merge_dict(settings: RunSettings, data: dict[str, Any], source: str) -> None:
    """Merge dictionary values into settings, skipping unknown or ill-typed keys."""
    for key, value in data.items():
        if key not in _KNOWN:
            logger.warning("Ignoring unknown setting '%s' in %s", key, source)
        elif not _valid(key, value):
            logger.warning("Ignoring invalid value %r for '%s' in %s", value, key, source)
        else:
            setattr(settings, key, value)


def _merge_env(settings: RunSettings, env: Mapping[str, str]) -> None:
    for name, key in ((ORDER_ENV, "order"), (WORKERS_ENV, "workers")):
        raw = env.get(name)
        if raw is None:
            continue
        try:
            value = int(raw)
        except ValueError:
            logger.warning("Ignoring %s=%r: not an integer", name, raw)
            continue
        _merge_dict(settings, {key: value}, name)
