"""Tests for run settings loading."""

from __future__ import annotations

import logging
import os
from pathlib import Path
from unittest.mock import patch

import pytest

from wallcross.config import RunSettings, _merge_dict, _merge_env, _merge_toml, load_settings


def test_default_settings() -> None:
    settings = RunSettings()
    assert settings.order is None
    assert settings.format == "json"
    assert settings.workers == 1
    assert settings.genus == 2


def test_order_defaults_to_ten_times_genus() -> None:
    assert RunSettings().order_for(3) == 30
    assert RunSettings(order=7).order_for(3) == 7


def test_global_config_is_created(_isolate_global_config: Path, project_dir: Path) -> None:
    assert not _isolate_global_config.exists()
    settings = load_settings(project_dir)
    assert _isolate_global_config.exists()
    assert "wallcross configuration" in _isolate_global_config.read_text()
    assert settings == RunSettings()


def test_project_overrides_global(_isolate_global_config: Path, project_dir: Path) -> None:
    _isolate_global_config.parent.mkdir(parents=True)
    _isolate_global_config.write_text('order = 12\nformat = "csv"\n')
    (project_dir / ".wallcross.toml").write_text("order = 30\ngenus = 3\n")

    settings = load_settings(project_dir)

    assert settings.order == 30
    assert settings.format == "csv"
    assert settings.genus == 3


def test_env_overrides_files(project_dir: Path) -> None:
    (project_dir / ".wallcross.toml").write_text("workers = 2\n")
    with patch.dict(os.environ, {"WALLCROSS_WORKERS": "4", "WALLCROSS_ORDER": "16"}):
        settings = load_settings(project_dir)
    assert settings.workers == 4
    assert settings.order == 16


class TestValidation:
    def test_unknown_key_warns(self, caplog: pytest.LogCaptureFixture) -> None:
        settings = RunSettings()
        with caplog.at_level(logging.WARNING, logger="wallcross"):
            _merge_dict(settings, {"colour": "red"}, "test")
        assert "Ignoring unknown setting 'colour'" in caplog.text

    @pytest.mark.parametrize(
        ("key", "value"),
        [("order", 0), ("order", True), ("genus", 1), ("format", "xml"), ("workers", "2")],
    )
    def test_invalid_values_are_ignored(self, key: str, value: object) -> None:
        settings = RunSettings()
        _merge_dict(settings, {key: value}, "test")
        assert settings == RunSettings()

    def test_non_integer_env(self, caplog: pytest.LogCaptureFixture) -> None:
        settings = RunSettings()
        with caplog.at_level(logging.WARNING, logger="wallcross"):
            _merge_env(settings, {"WALLCROSS_ORDER": "lots"})
        assert settings.order is None
        assert "not an integer" in caplog.text

    def test_toml_file(self, tmp_path: Path) -> None:
        path = tmp_path / "settings.toml"
        path.write_text('format = "toon"\n')
        settings = RunSettings()
        _merge_toml(settings, path)
        assert settings.format == "toon"
