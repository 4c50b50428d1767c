"""Pytest configuration and fixtures."""

import os
from collections.abc import Generator
from pathlib import Path
from unittest.mock import patch

import pytest

# ============================================================
# Config isolation
# ============================================================


@pytest.fixture(autouse=True)
def _isolate_global_config(tmp_path: Path) -> Generator[Path, None, None]:
    """Keep tests away from the real global config and WALLCROSS_* variables."""
    fake_config_path = tmp_path / "global" / "config.toml"
    env = {k: v for k, v in os.environ.items() if not k.startswith("WALLCROSS_")}
    with (
        patch("wallcross.constants.GLOBAL_CONFIG_PATH", fake_config_path),
        patch.dict(os.environ, env, clear=True),
    ):
        yield fake_config_path


# ============================================================
# Project directory fixtures
# ============================================================


@pytest.fixture
def project_dir(tmp_path: Path) -> Path:
    """Provide a temporary project directory."""
    path = tmp_path / "project"
    path.mkdir()
    return path
